#include "starhess/rational.hpp"

#include <cctype>
#include <ostream>

#include "starhess/errors.hpp"

namespace starhess {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
  if (v_.get_den() == 0) throw Error("zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  if (v_.get_den() == 0) throw Error("zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto digits = [](const std::string& t, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  size_t start = 0;
  if (start < t.size() && t[start] == '-') ++start;
  size_t slash = t.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = digits(t, start, t.size());
  } else {
    ok = digits(t, start, slash) && digits(t, slash + 1, t.size());
  }
  if (!ok) throw UsageError("not a rational literal: '" + s + "'");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw UsageError("not a rational literal: '" + s + "'");
  if (q.get_den() == 0) throw UsageError("zero denominator: '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow(long e) const {
  if (e == 0) return one();
  if (is_zero() && e < 0) throw Error("zero to a negative power");
  mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  mpq_class acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return Rational(std::move(acc));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pochhammer(const Rational& c, unsigned long n) {
  Rational acc = Rational::one();
  Rational term = c;
  for (unsigned long i = 0; i < n; ++i) {
    acc *= term;
    term += Rational(1);
  }
  return acc;
}

mpz_class factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return z;
}

}  // namespace starhess
