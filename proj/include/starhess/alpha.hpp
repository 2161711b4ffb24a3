#pragma once

#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "starhess/errors.hpp"
#include "starhess/multipoly.hpp"
#include "starhess/rational.hpp"

namespace starhess {

/// alpha_k for the explicit hypergeometric family: (k+1)(k+2)...(k+r) / (r+1)^r.
Rational appell_alpha(int r, long k);

/// Specification of the coefficient sequence (alpha_n).  Three modes:
///   Symbolic    a_k is the indeterminate a_k of the polynomial ring
///   Explicit    a_k comes from a finite list of exact rationals
///   Appell      a_k = (k+1)(k+2)...(k+r) / (r+1)^r
/// Negative indices always evaluate to the ring zero.
class AlphaSpec {
 public:
  enum class Mode { Symbolic, Explicit, Appell };

  static AlphaSpec symbolic() { return AlphaSpec(Mode::Symbolic, {}, 0); }
  static AlphaSpec explicit_values(std::vector<Rational> v) {
    return AlphaSpec(Mode::Explicit, std::move(v), 0);
  }
  static AlphaSpec appell(int r) {
    if (r < 1) throw UsageError("appell alpha needs r >= 1");
    return AlphaSpec(Mode::Appell, {}, r);
  }
  /// All-ones list of the given length, handy for path counting.
  static AlphaSpec ones(size_t count) {
    return explicit_values(std::vector<Rational>(count, Rational::one()));
  }

  /// Parses a CLI-style description: "symbolic", "appell", or a
  /// comma-separated list of rationals ("1,1/2,2/3").
  static AlphaSpec parse(const std::string& text, int r);

  Mode mode() const { return mode_; }
  const std::vector<Rational>& values() const { return values_; }
  int appell_r() const { return appell_r_; }

  std::string describe() const;

 private:
  AlphaSpec(Mode m, std::vector<Rational> v, int r)
      : mode_(m), values_(std::move(v)), appell_r_(r) {}

  Mode mode_;
  std::vector<Rational> values_;
  int appell_r_;
};

/// alpha_m as an element of the ring R.  m < 0 yields the ring zero.
/// Symbolic alpha is only meaningful over MultiPoly; Explicit and Appell only
/// over Rational.  A mismatch is a usage error.
template <class R>
R alpha_value(const AlphaSpec& a, long m) {
  if (m < 0) return R::zero();
  if constexpr (std::is_same_v<R, MultiPoly>) {
    if (a.mode() != AlphaSpec::Mode::Symbolic)
      throw UsageError("numeric alpha requested in the symbolic ring");
    return MultiPoly::indeterminate(static_cast<int>(m));
  } else {
    static_assert(std::is_same_v<R, Rational>);
    switch (a.mode()) {
      case AlphaSpec::Mode::Symbolic:
        throw UsageError("symbolic alpha requested in the rational ring");
      case AlphaSpec::Mode::Explicit:
        if (m >= static_cast<long>(a.values().size())) throw InsufficientAlpha(m + 1);
        return a.values()[static_cast<size_t>(m)];
      case AlphaSpec::Mode::Appell:
        return appell_alpha(a.appell_r(), m);
    }
    throw Error("unreachable");
  }
}

/// Rational assignment a_i -> value for the given index set, for
/// substituting into symbolic results.
std::map<int, Rational> alpha_assignment(const AlphaSpec& a, const std::set<int>& indices);

}  // namespace starhess
