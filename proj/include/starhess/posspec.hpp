#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "starhess/errors.hpp"
#include "starhess/matrix.hpp"
#include "starhess/multipoly.hpp"
#include "starhess/parallel.hpp"
#include "starhess/rational.hpp"
#include "starhess/unipoly.hpp"

namespace starhess {
namespace posspec {

using RatPoly = UniPoly<Rational>;

/// Largest minor order accepted by the symbolic cofactor expansion.
inline constexpr int kMaxSymbolicMinorOrder = 6;

namespace detail {

// Cofactor expansion along the first column; fine for the small symbolic
// orders the caps allow.
template <class R>
R det_cofactor(const DenseMatrix<R>& m) {
  size_t n = m.rows();
  if (n == 0) return R::one();
  if (n == 1) return m.at(0, 0);
  R det = R::zero();
  for (size_t i = 0; i < n; ++i) {
    if (m.at(i, 0).is_zero()) continue;
    DenseMatrix<R> sub(n - 1, n - 1);
    for (size_t p = 0, sp = 0; p < n; ++p) {
      if (p == i) continue;
      for (size_t q = 1; q < n; ++q) sub.at(sp, q - 1) = m.at(p, q);
      ++sp;
    }
    R term = m.at(i, 0) * det_cofactor(sub);
    if (i % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

Rational det_bareiss(DenseMatrix<Rational> m);

}  // namespace detail

/// Exact determinant of the submatrix picked out by the given row and column
/// index sets (equal sizes).  Rational matrices go through fraction-free
/// elimination, symbolic ones through cofactor expansion with a small order
/// cap.
template <class R>
R minor_det(const DenseMatrix<R>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw IndexOutOfRange("row and column sets differ in size");
  for (int i : rows)
    if (i < 0 || i >= static_cast<int>(m.rows())) throw IndexOutOfRange("row index out of range");
  for (int j : cols)
    if (j < 0 || j >= static_cast<int>(m.cols()))
      throw IndexOutOfRange("column index out of range");
  DenseMatrix<R> sub(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
  if constexpr (std::is_same_v<R, Rational>) {
    return detail::det_bareiss(std::move(sub));
  } else {
    if (static_cast<int>(rows.size()) > kMaxSymbolicMinorOrder)
      throw IndexOutOfRange("symbolic minor order above the configured bound");
    return detail::det_cofactor(sub);
  }
}

struct MinorReport {
  int order = 0;
  std::vector<int> rows, cols;
  std::string value;
  bool nonneg = false;
};

struct TpVerdict {
  bool all_nonnegative = true;
  long minors_checked = 0;
  std::vector<MinorReport> reports;      // empty when keep_reports is false
  MinorReport first_violation;           // meaningful when !all_nonnegative
};

namespace detail {

std::vector<std::vector<int>> index_subsets(int m, int order);

template <class R>
bool value_nonnegative(const R& v) {
  if constexpr (std::is_same_v<R, Rational>) {
    return v.sign() >= 0;
  } else {
    return v.coefficients_nonnegative();
  }
}

}  // namespace detail

/// Enumerates every d' x d' minor with d' <= max_order of the leading m x m
/// block and tests nonnegativity: sign for rationals, coefficientwise for
/// symbolic entries.  Minor enumeration runs in parallel; reports merge in
/// deterministic index order.
template <class R>
TpVerdict tp_check(const DenseMatrix<R>& matrix, int m, int max_order, bool keep_reports = true) {
  if (m > static_cast<int>(matrix.rows()) || m > static_cast<int>(matrix.cols()))
    throw IndexOutOfRange("leading block larger than matrix");
  if (max_order > m) max_order = m;
  TpVerdict verdict;
  for (int order = 1; order <= max_order; ++order) {
    auto subsets = detail::index_subsets(m, order);
    size_t pairs = subsets.size() * subsets.size();
    std::vector<MinorReport> batch(pairs);
    parallel_for(pairs, [&](size_t idx) {
      const auto& rows = subsets[idx / subsets.size()];
      const auto& cols = subsets[idx % subsets.size()];
      R v = minor_det(matrix, rows, cols);
      MinorReport rep;
      rep.order = order;
      rep.rows = rows;
      rep.cols = cols;
      rep.nonneg = detail::value_nonnegative(v);
      rep.value = v.str();
      batch[idx] = std::move(rep);
    });
    for (auto& rep : batch) {
      ++verdict.minors_checked;
      if (!rep.nonneg && verdict.all_nonnegative) {
        verdict.all_nonnegative = false;
        verdict.first_violation = rep;
      }
      if (keep_reports) verdict.reports.push_back(std::move(rep));
    }
  }
  return verdict;
}

/// Oscillation criterion for a rational square matrix: totally positive
/// (all minors, all orders), nonsingular, and positive entries on both the
/// subdiagonal and the supradiagonal.
bool oscillation_check(const DenseMatrix<Rational>& m);

/// Isolating interval (lo, hi) with exact rational endpoints certifying one
/// simple root; the target polynomial changes sign across it.
struct RootBox {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
};

/// Certifies that p is squarefree with exactly deg(p) simple roots in
/// (0, inf) and returns isolating boxes of width <= width, sorted
/// increasingly and pairwise disjoint.  Sturm counts at exact rational
/// endpoints; no floating point.
std::vector<RootBox> isolate_positive_simple_roots(const RatPoly& p, const Rational& width);

/// Strict interlacing of the roots of p_n (boxes_n) and p_next (boxes_next,
/// one more root): certifies x_1' < x_1 < x_2' < ... by refining boxes until
/// ordered.  A common root of the two polynomials (detected exactly via gcd)
/// yields false; refinement below width 2^-256 without an ordering throws
/// CannotSeparate.
bool interlacing_check(const RatPoly& p_n, std::vector<RootBox> boxes_n, const RatPoly& p_next,
                       std::vector<RootBox> boxes_next);

/// One zero of the symmetric polynomial on the (r+1)-star: the radius box
/// certifies the positive (r+1)-th root of an isolated component zero, and
/// ray k places it on the ray of angle 2 pi k / (r+1).
struct StarZero {
  int ray = 0;
  RootBox radius;
  int origin_multiplicity = 0;
};

/// Maps component root boxes to star zeros: each radius box encloses the
/// (r+1)-th root of the component box with outward rational rounding and is
/// replicated on the rays k = 0..r; the origin multiplicity j rides along.
std::vector<StarZero> star_zero_map(int r, int j, const std::vector<RootBox>& boxes,
                                    const Rational& width);

/// Rational bracket [lo, hi] with lo^m <= c <= hi^m and hi - lo <= width.
RootBox nth_root_bounds(const Rational& c, int m, const Rational& width);

// Exact polynomial helpers over the rationals, shared with the Sturm
// machinery and exposed for tests.
RatPoly poly_derivative(const RatPoly& p);
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& num, const RatPoly& den);
RatPoly poly_gcd(RatPoly a, RatPoly b);
Rational poly_eval(const RatPoly& p, const Rational& x);

}  // namespace posspec
}  // namespace starhess
