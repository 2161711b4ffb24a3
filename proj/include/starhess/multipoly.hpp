#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starhess/rational.hpp"

namespace starhess {

/// Sparse multivariate polynomial over the integers in the indeterminate
/// family a0, a1, a2, ...  Terms are keyed by their exponent vector, stored
/// sparsely as (index, exponent) pairs sorted by index with exponent >= 1.
/// The term map is ordered graded-lexicographically (total degree first,
/// then the exponent list), which fixes the canonical form used for
/// equality, serialisation, and printing.
class MultiPoly {
 public:
  using Exponents = std::vector<std::pair<int, int>>;

  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };

  using TermMap = std::map<Exponents, mpz_class, GradedLex>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return constant(1); }
  static MultiPoly from_int(long n) { return constant(mpz_class(n)); }
  static MultiPoly constant(mpz_class c);
  static MultiPoly indeterminate(int i);
  /// Single term c * prod a_i^e, normalising the exponent list.
  static MultiPoly from_term(Exponents e, mpz_class c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// True when every stored coefficient is positive (equivalently the
  /// polynomial is coefficientwise nonnegative, zeros are never stored).
  bool coefficients_nonnegative() const;

  std::set<int> indeterminates() const;

  /// Evaluates under a_i -> assignment.at(i); throws MissingAssignment if an
  /// indeterminate occurring here has no value.  Ring homomorphism.
  Rational substitute(const std::map<int, Rational>& assignment) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void add_term(const Exponents& e, const mpz_class& c);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace starhess
