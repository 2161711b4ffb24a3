#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "starhess/alpha.hpp"
#include "starhess/bidiag.hpp"
#include "starhess/errors.hpp"
#include "starhess/paths.hpp"
#include "starhess/prodmat.hpp"
#include "starhess/unipoly.hpp"

namespace starhess {
namespace mop {

/// The (r+1)-fold symmetric sequence generated by
///   P_j(x) = x^j for 0 <= j <= r,
///   P_{n+r+1}(x) = x P_{n+r}(x) - alpha_n P_n(x),
/// stored through max_degree.
template <class R>
struct SymmetricMOPS {
  int r = 0;
  std::vector<UniPoly<R>> polys;  // P_0 .. P_max_degree
};

template <class R>
SymmetricMOPS<R> symmetric_sequence(int r, const AlphaSpec& alpha, int max_degree) {
  if (r < 1 || max_degree < 0) throw UsageError("need r >= 1 and max_degree >= 0");
  SymmetricMOPS<R> s;
  s.r = r;
  s.polys.reserve(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) {
    if (n <= r) {
      s.polys.push_back(UniPoly<R>::monomial(R::one(), n));
    } else {
      UniPoly<R> next = s.polys[n - 1].times_x_power(1);
      next -= alpha_value<R>(alpha, n - r - 1) * s.polys[n - r - 1];
      s.polys.push_back(std::move(next));
    }
  }
  return s;
}

/// One component of the (r+1)-fold decomposition:
/// P_{(r+1)n+j}(x) = x^j P_n^[j](x^{r+1}).
template <class R>
struct ComponentSeq {
  int r = 0;
  int j = 0;
  std::vector<UniPoly<R>> polys;  // P_0^[j] .. monic of degree n
};

/// Splits a symmetric sequence into its r+1 components by reading every
/// (r+1)-th coefficient.  A nonzero coefficient at a forbidden exponent
/// (m != n mod r+1) throws SymmetryViolation.
template <class R>
std::vector<ComponentSeq<R>> decompose(const SymmetricMOPS<R>& s) {
  int m = s.r + 1;
  std::vector<ComponentSeq<R>> out(m);
  for (int j = 0; j <= s.r; ++j) {
    out[j].r = s.r;
    out[j].j = j;
  }
  for (int n = 0; n < static_cast<int>(s.polys.size()); ++n) {
    const auto& p = s.polys[n];
    for (int d = 0; d <= p.degree(); ++d)
      if (!p.coeff(d).is_zero() && (d - n) % m != 0) throw SymmetryViolation(n, d);
    int j = n % m;
    int q = n / m;
    std::vector<R> comp(q + 1, R::zero());
    for (int i = 0; i <= q; ++i) comp[i] = p.coeff(m * i + j);
    out[j].polys.push_back(UniPoly<R>(std::move(comp)));
  }
  return out;
}

/// Rebuilds P_{(r+1)n+j}(x) = x^j P_n^[j](x^{r+1}) from a component entry.
template <class R>
UniPoly<R> recompose(int r, int j, const UniPoly<R>& comp) {
  if (comp.is_zero()) return UniPoly<R>::zero();
  std::vector<R> c(static_cast<size_t>(r + 1) * comp.degree() + j + 1, R::zero());
  for (int i = 0; i <= comp.degree(); ++i) c[static_cast<size_t>(r + 1) * i + j] = comp.coeff(i);
  return UniPoly<R>(std::move(c));
}

/// gamma_n^[k;j], shared with the closed-form Hessenberg entries.
template <class R>
R component_gamma(int r, int j, const AlphaSpec& alpha, int n, int k) {
  return bidiag::gamma_coefficient<R>(r, j, alpha, n, k);
}

template <class R>
struct RecurrenceCheck {
  bool pass = true;
  int first_fail_n = -1;
  UniPoly<R> residual;
};

/// Asserts P_{n+1}^[j] = x P_n^[j] - sum_{k=0}^{min(r,n)} gamma_{n-k}^[k;j]
/// P_{n-k}^[j] for every stored n.
template <class R>
RecurrenceCheck<R> verify_component_recurrence(const ComponentSeq<R>& c, const AlphaSpec& alpha) {
  RecurrenceCheck<R> res;
  for (int n = 0; n + 1 < static_cast<int>(c.polys.size()); ++n) {
    UniPoly<R> rhs = c.polys[n].times_x_power(1);
    for (int k = 0; k <= std::min(c.r, n); ++k)
      rhs -= component_gamma<R>(c.r, c.j, alpha, n - k, k) * c.polys[n - k];
    UniPoly<R> residual = c.polys[n + 1] - rhs;
    if (!residual.is_zero()) {
      res.pass = false;
      res.first_fail_n = n;
      res.residual = std::move(residual);
      return res;
    }
  }
  return res;
}

/// A linear functional represented by its moments m_n = <u, x^n>.
template <class R>
struct MomentFunctional {
  std::vector<R> moments;

  R apply(const UniPoly<R>& p) const {
    if (p.degree() >= static_cast<int>(moments.size())) throw InsufficientMoments(p.degree());
    R acc = R::zero();
    for (int k = 0; k <= p.degree(); ++k) {
      const R& c = p.coeff(k);
      if (!c.is_zero()) acc += c * moments[k];
    }
    return acc;
  }

  /// The functional x.u with moments shifted by one degree.
  MomentFunctional shifted() const {
    if (moments.empty()) return {};
    return {std::vector<R>(moments.begin() + 1, moments.end())};
  }
};

/// The values Z^(r;t)_n for n < count, computed through the production
/// machinery (column 0 of the output matrix of H^(r;t)) rather than by path
/// summation, which stays in the oracle module.
template <class R>
std::vector<R> modified_sr_sequence(int r, int t, int count, const AlphaSpec& alpha) {
  if (t < 0 || t > r) throw IndexOutOfRange("need 0 <= t <= r");
  auto H = bidiag::hessenberg_product<R>(r, t, alpha, count + 1);
  auto out = prodmat::output_matrix(H, count);
  std::vector<R> m;
  m.reserve(count);
  for (int n = 0; n < count; ++n) m.push_back(out.rows[n][0]);
  return m;
}

/// The orthogonality functionals (v_{j+1}, ..., v_r, x v_1, ..., x v_j) for
/// the component of type j, where <v_i, x^n> is the modified polynomial of
/// type i-1.  Each functional carries moments for degrees 0..M-1.
template <class R>
std::vector<MomentFunctional<R>> component_functionals(int r, int j, const AlphaSpec& alpha,
                                                       int M) {
  if (j < 0 || j > r) throw IndexOutOfRange("need 0 <= j <= r");
  std::vector<MomentFunctional<R>> out;
  for (int i = j + 1; i <= r; ++i) out.push_back({modified_sr_sequence<R>(r, i - 1, M, alpha)});
  for (int i = 1; i <= j; ++i) {
    // One extra degree absorbs the moment shift of x v_i.
    auto m = modified_sr_sequence<R>(r, i - 1, M + 1, alpha);
    out.push_back(MomentFunctional<R>{std::move(m)}.shifted());
  }
  return out;
}

/// The functionals (u_0, ..., u_{r-1}) of the symmetric sequence, defined by
/// <u_j, x^{(r+1)n+k}> = Z^(r;j)_n when k = j and 0 otherwise, with moments
/// for degrees 0..M-1.
template <class R>
std::vector<MomentFunctional<R>> symmetric_functionals(int r, const AlphaSpec& alpha, int M) {
  std::vector<MomentFunctional<R>> out;
  for (int j = 0; j < r; ++j) {
    int n_max = (M - 1 - j) / (r + 1);
    std::vector<R> zvals = modified_sr_sequence<R>(r, j, n_max + 1, alpha);
    std::vector<R> m(M, R::zero());
    for (int t = 0; t < M; ++t)
      if ((t - j) % (r + 1) == 0 && t >= j) m[t] = zvals[(t - j) / (r + 1)];
    out.push_back({std::move(m)});
  }
  return out;
}

/// Star-measure moment bookkeeping: the m-th moment of the measure on the
/// (r+1)-star attached to index j vanishes unless m = (r+1)n + j - 1, in
/// which case it equals the modified polynomial Z^(r;j-1)_n.
template <class R>
R star_moment(int r, int j, long m, const AlphaSpec& alpha) {
  if (j < 1 || j > r) throw IndexOutOfRange("need 1 <= j <= r");
  if (m < 0) throw UsageError("need m >= 0");
  if ((m - (j - 1)) % (r + 1) != 0) return R::zero();
  int n = static_cast<int>((m - (j - 1)) / (r + 1));
  return modified_sr_sequence<R>(r, j - 1, n + 1, alpha)[n];
}

/// One orthogonality condition outcome.  Functional indices are 1-based to
/// match the system (v_1, ..., v_r).
struct OrthoEntry {
  int functional = 0;
  int k = 0;
  int n = 0;
  bool expect_nonzero = false;
  std::string value;
  bool pass = false;
};

struct OrthogonalityReport {
  bool pass = true;
  std::vector<OrthoEntry> entries;
};

/// Checks <v_i, x^k P_n> = 0 for n >= rk + i and != 0 for n = rk + i - 1,
/// for every functional index i and every admissible pair (k, n) with
/// n <= max_n.  Values are reported, only nonvanishing is asserted.
template <class R>
OrthogonalityReport orthogonality_check(const prodmat::PolySeq<R>& P,
                                        const std::vector<MomentFunctional<R>>& functionals,
                                        int r, int max_n) {
  if (static_cast<int>(P.size()) <= max_n) throw UsageError("sequence shorter than max_n");
  OrthogonalityReport report;
  for (int fi = 1; fi <= static_cast<int>(functionals.size()); ++fi) {
    const auto& v = functionals[fi - 1];
    for (int k = 0; r * k + fi - 1 <= max_n; ++k) {
      for (int n = r * k + fi - 1; n <= max_n; ++n) {
        if (n < 0) continue;
        R value = v.apply(P[n].times_x_power(k));
        OrthoEntry e;
        e.functional = fi;
        e.k = k;
        e.n = n;
        e.expect_nonzero = (n == r * k + fi - 1);
        e.value = value.str();
        e.pass = e.expect_nonzero ? !value.is_zero() : value.is_zero();
        if (!e.pass) report.pass = false;
        report.entries.push_back(std::move(e));
      }
    }
  }
  return report;
}

/// Dual moments of the symmetric sequence: the triangular inverse of its
/// coefficient matrix, with the fold-symmetry zero pattern checked and the
/// congruent entries compared against the path oracle.
template <class R>
struct SymmetricDualMoments {
  prodmat::TriangularMatrix<R> matrix;
  bool zero_pattern_ok = true;
  bool oracle_ok = true;
};

template <class R>
SymmetricDualMoments<R> dual_moments_symmetric(int r, const AlphaSpec& alpha, int M) {
  auto S = symmetric_sequence<R>(r, alpha, M - 1);
  SymmetricDualMoments<R> out;
  out.matrix = prodmat::dual_moment_matrix(S.polys, M);
  for (int n = 0; n < M && out.zero_pattern_ok; ++n)
    for (int k = 0; k <= n; ++k)
      if ((n - k) % (r + 1) != 0 && !out.matrix.rows[n][k].is_zero()) {
        out.zero_pattern_ok = false;
        break;
      }
  for (int j = 0; j <= r; ++j) {
    int n_max = (M - 1 - j) / (r + 1);
    if (n_max < 0) continue;
    auto table = paths::generalised_sr_table<R>(r, j, n_max, n_max, alpha);
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k)
        if (out.matrix.entry((r + 1) * n + j, (r + 1) * k + j) != table[n][k])
          out.oracle_ok = false;
  }
  return out;
}

}  // namespace mop
}  // namespace starhess
