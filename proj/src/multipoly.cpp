#include "starhess/multipoly.hpp"

#include <algorithm>
#include <ostream>

#include "starhess/errors.hpp"

namespace starhess {

namespace {

int total_degree(const MultiPoly::Exponents& e) {
  int d = 0;
  for (const auto& [i, k] : e) d += k;
  return d;
}

// Merge of two sorted exponent vectors, adding exponents on equal indices.
MultiPoly::Exponents merge_exponents(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  MultiPoly::Exponents out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

bool MultiPoly::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(mpz_class c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::indeterminate(int i) {
  if (i < 0) throw IndexOutOfRange("indeterminate index must be nonnegative");
  MultiPoly p;
  p.terms_.emplace(Exponents{{i, 1}}, mpz_class(1));
  return p;
}

MultiPoly MultiPoly::from_term(Exponents e, mpz_class c) {
  std::sort(e.begin(), e.end());
  Exponents norm;
  for (const auto& [i, k] : e) {
    if (i < 0) throw IndexOutOfRange("indeterminate index must be nonnegative");
    if (k == 0) continue;
    if (k < 0) throw IndexOutOfRange("exponents must be nonnegative");
    if (!norm.empty() && norm.back().first == i)
      norm.back().second += k;
    else
      norm.emplace_back(i, k);
  }
  MultiPoly p;
  p.add_term(norm, c);
  return p;
}

bool MultiPoly::coefficients_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::set<int> MultiPoly::indeterminates() const {
  std::set<int> out;
  for (const auto& [e, c] : terms_)
    for (const auto& [i, k] : e) out.insert(i);
  return out;
}

Rational MultiPoly::substitute(const std::map<int, Rational>& assignment) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term{Rational(mpz_class(c), mpz_class(1))};
    for (const auto& [i, k] : e) {
      auto it = assignment.find(i);
      if (it == assignment.end()) throw MissingAssignment(i);
      term *= it->second.pow(k);
    }
    total += term;
  }
  return total;
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, mpz_class(-c));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(merge_exponents(ea, eb), mpz_class(ca * cb));
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, mpz_class(-c));
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = ::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool need_coeff = (mag != 1) || e.empty();
    if (need_coeff) out += mag.get_str();
    for (size_t t = 0; t < e.size(); ++t) {
      if (need_coeff || t > 0) out += "*";
      out += "a" + std::to_string(e[t].first);
      if (e[t].second > 1) out += "^" + std::to_string(e[t].second);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace starhess
