#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace starhess {

/// Exact rational number backed by GMP, always kept canonical:
/// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpq_class q);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }

  /// Accepts "p/q" or "p" with optional leading sign; rejects anything else
  /// (in particular decimal notation).
  static Rational parse(const std::string& s);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;
  Rational pow(long e) const;  // negative e inverts; zero base with e < 0 throws

  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Rising factorial c(c+1)...(c+n-1); empty product for n = 0.
Rational pochhammer(const Rational& c, unsigned long n);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace starhess
