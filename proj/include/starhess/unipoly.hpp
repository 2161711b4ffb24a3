#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace starhess {

/// Dense univariate polynomial in x over a coefficient ring R.  The ring type
/// provides zero(), one(), from_int(), is_zero(), arithmetic, and equality.
/// Canonical form: no trailing zero coefficients, so degree() is the index of
/// the leading coefficient and the zero polynomial has degree -1.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return monomial(R::one(), 0); }
  static UniPoly x() { return monomial(R::one(), 1); }

  static UniPoly monomial(R coef, int deg) {
    UniPoly p;
    if (!coef.is_zero()) {
      p.c_.assign(deg + 1, R::zero());
      p.c_[deg] = std::move(coef);
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return R::zero();
    return c_[k];
  }

  bool is_monic() const { return !c_.empty() && c_.back() == R::one(); }

  const R& leading() const { return c_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R::zero());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R::zero());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }

  friend UniPoly operator-(const UniPoly& a) {
    std::vector<R> out;
    out.reserve(a.c_.size());
    for (const R& c : a.c_) out.push_back(-c);
    return UniPoly(std::move(out));
  }

  friend UniPoly operator*(const R& s, const UniPoly& p) {
    if (s.is_zero()) return zero();
    std::vector<R> out;
    out.reserve(p.c_.size());
    for (const R& c : p.c_) out.push_back(s * c);
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Multiplication by x^k.
  UniPoly times_x_power(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<R> out(c_.size() + k, R::zero());
    for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return UniPoly(std::move(out));
  }

  R eval(const R& v) const {
    R acc = R::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[k].str() + ")";
      if (k > 0) out += "*x";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<R> c_;
};

/// Formal derivative in x.
template <class R>
UniPoly<R> differentiate(const UniPoly<R>& p) {
  if (p.degree() <= 0) return UniPoly<R>::zero();
  std::vector<R> out;
  out.reserve(p.degree());
  for (int k = 1; k <= p.degree(); ++k) out.push_back(R::from_int(k) * p.coeff(k));
  return UniPoly<R>(std::move(out));
}

template <class R>
std::ostream& operator<<(std::ostream& os, const UniPoly<R>& p) {
  return os << p.str();
}

}  // namespace starhess
