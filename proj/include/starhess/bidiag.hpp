#pragma once

#include <map>
#include <vector>

#include "starhess/alpha.hpp"
#include "starhess/errors.hpp"
#include "starhess/matrix.hpp"

namespace starhess {
namespace bidiag {

/// One truncated bidiagonal factor.  Lower(k) carries a unit diagonal and
/// subdiagonal entries alpha_{(r+1)i + k} at row i+1; Upper carries diagonal
/// entries alpha_{(r+1)i} and a unit supradiagonal.
template <class R>
struct BidiagonalFactor {
  enum class Kind { Lower, Upper };

  Kind kind;
  int k;  // 1..r for Lower, 0 for Upper
  int r;
  int size;
  std::vector<R> diag;  // size entries
  std::vector<R> off;   // size-1 entries: subdiagonal (Lower) or supradiagonal (Upper)

  DenseMatrix<R> dense() const {
    DenseMatrix<R> m(size, size);
    for (int i = 0; i < size; ++i) m.at(i, i) = diag[i];
    for (int i = 0; i + 1 < size; ++i) {
      if (kind == Kind::Lower)
        m.at(i + 1, i) = off[i];
      else
        m.at(i, i + 1) = off[i];
    }
    return m;
  }
};

/// Finite leading section of an (r+2)-banded unit-lower-Hessenberg matrix.
/// Entries live on offsets d = m - n in {-1, 0, ..., r}; band d is stored as
/// the list of entries h_{n+d, n} indexed by column n.
template <class R>
class BandedHessenberg {
 public:
  BandedHessenberg(int r, int j, int size) : r_(r), j_(j), size_(size) {
    if (r < 1 || size < 1) throw UsageError("need r >= 1 and size >= 1");
    for (int d = -1; d <= r; ++d) bands_.emplace(d, std::vector<R>(band_length(d), R::zero()));
    for (auto& e : bands_.at(-1)) e = R::one();
  }

  int r() const { return r_; }
  int j() const { return j_; }
  int size() const { return size_; }

  int band_length(int d) const { return size_ - (d < 0 ? -d : d); }

  /// Entry h_{n+d, n}; n is the column index.
  R& band_entry(int d, int n) { return bands_.at(d)[band_index(d, n)]; }
  const R& band_entry(int d, int n) const { return bands_.at(d)[band_index(d, n)]; }

  const std::map<int, std::vector<R>>& bands() const { return bands_; }

  R entry(int m, int n) const {
    if (m < 0 || n < 0 || m >= size_ || n >= size_) throw IndexOutOfRange("entry outside matrix");
    int d = m - n;
    if (d < -1 || d > r_) return R::zero();
    return band_entry(d, n);
  }

  DenseMatrix<R> dense() const {
    DenseMatrix<R> out(size_, size_);
    for (int m = 0; m < size_; ++m)
      for (int n = 0; n < size_; ++n) out.at(m, n) = entry(m, n);
    return out;
  }

  /// Extracts the leading N x N section from a dense matrix, checking the
  /// banded unit-lower-Hessenberg shape.
  static BandedHessenberg from_dense(int r, int j, const DenseMatrix<R>& m, int N) {
    if (static_cast<int>(m.rows()) < N || static_cast<int>(m.cols()) < N)
      throw TruncationTooSmall("dense matrix smaller than requested section");
    BandedHessenberg h(r, j, N);
    for (int row = 0; row < N; ++row)
      for (int col = 0; col < N; ++col) {
        int d = row - col;
        const R& v = m.at(row, col);
        if (d < -1 || d > r) {
          if (!v.is_zero()) throw Error("entry outside the band structure is nonzero");
        } else if (d == -1) {
          if (v != R::one()) throw Error("supradiagonal entry is not the ring one");
        } else {
          h.band_entry(d, col) = v;
        }
      }
    return h;
  }

  /// Leading N x N section of this matrix.
  BandedHessenberg leading(int N) const {
    if (N > size_) throw TruncationTooSmall("leading section larger than truncation");
    BandedHessenberg h(r_, j_, N);
    for (int d = 0; d <= r_; ++d)
      for (int n = 0; n + d < N; ++n) h.band_entry(d, n) = band_entry(d, n);
    return h;
  }

  /// Scan check for the band invariants: unit supradiagonal and consistent
  /// band lengths.  Out-of-band entries cannot be represented at all.
  bool band_structure_ok() const {
    for (int n = 1; n < size_; ++n)
      if (band_entry(-1, n) != R::one()) return false;
    for (const auto& [d, band] : bands_)
      if (static_cast<int>(band.size()) != band_length(d)) return false;
    return true;
  }

  friend bool operator==(const BandedHessenberg& a, const BandedHessenberg& b) {
    return a.r_ == b.r_ && a.j_ == b.j_ && a.size_ == b.size_ && a.bands_ == b.bands_;
  }

 private:
  int band_index(int d, int n) const {
    int lo = d < 0 ? -d : 0;
    int i = n - lo;
    if (i < 0 || i >= band_length(d)) throw IndexOutOfRange("band index out of range");
    return i;
  }

  int r_, j_, size_;
  std::map<int, std::vector<R>> bands_;
};

namespace detail {

inline void check_explicit_length(const AlphaSpec& alpha, int r, int N) {
  if (alpha.mode() == AlphaSpec::Mode::Explicit &&
      static_cast<long>(alpha.values().size()) < static_cast<long>(r + 1) * N)
    throw InsufficientAlpha(static_cast<long>(r + 1) * N);
}

/// Iterates over all strictly decreasing tuples r >= t_0 > ... > t_k >= 0.
template <class F>
void for_each_decreasing_tuple(int r, int k, F&& fn) {
  std::vector<int> t(k + 1);
  // Seed with the lexicographically largest tuple and step downward.
  for (int i = 0; i <= k; ++i) t[i] = r - i;
  if (t[k] < 0) return;
  while (true) {
    fn(t);
    int i = k;
    while (i >= 0) {
      int floor_i = k - i;  // t_i must stay >= k - i to leave room below
      if (t[i] - 1 >= floor_i) break;
      --i;
    }
    if (i < 0) return;
    --t[i];
    for (int m = i + 1; m <= k; ++m) t[m] = t[m - 1] - 1;
  }
}

}  // namespace detail

/// Recurrence coefficient gamma_n^[k;j]: the sum over decreasing tuples
/// r >= t_0 > ... > t_k >= 0 of products alpha_{(r+1)(n+i) + t_i + j - r},
/// with alpha at negative indices equal to zero.  This is also the closed
/// form for the band-k entry h_{n+k,n} of the factorised Hessenberg matrix.
template <class R>
R gamma_coefficient(int r, int j, const AlphaSpec& alpha, int n, int k) {
  if (j < 0 || j > r || k < 0 || k > r) throw IndexOutOfRange("need 0 <= j,k <= r");
  R total = R::zero();
  detail::for_each_decreasing_tuple(r, k, [&](const std::vector<int>& t) {
    R prod = R::one();
    for (int i = 0; i <= k; ++i) {
      long idx = static_cast<long>(r + 1) * (n + i) + t[i] + j - r;
      if (idx < 0) return;  // a zero factor kills the tuple
      prod = prod * alpha_value<R>(alpha, idx);
    }
    total += prod;
  });
  return total;
}

/// The truncated factors (L_1, ..., L_r, U), each N x N.
template <class R>
std::vector<BidiagonalFactor<R>> build_factors(int r, const AlphaSpec& alpha, int N) {
  if (r < 1 || N < 1) throw UsageError("need r >= 1 and N >= 1");
  detail::check_explicit_length(alpha, r, N);
  std::vector<BidiagonalFactor<R>> out;
  for (int k = 1; k <= r; ++k) {
    BidiagonalFactor<R> L{BidiagonalFactor<R>::Kind::Lower, k, r, N, {}, {}};
    L.diag.assign(N, R::one());
    for (int i = 0; i + 1 < N; ++i)
      L.off.push_back(alpha_value<R>(alpha, static_cast<long>(r + 1) * i + k));
    out.push_back(std::move(L));
  }
  BidiagonalFactor<R> U{BidiagonalFactor<R>::Kind::Upper, 0, r, N, {}, {}};
  for (int i = 0; i < N; ++i)
    U.diag.push_back(alpha_value<R>(alpha, static_cast<long>(r + 1) * i));
  U.off.assign(N > 1 ? N - 1 : 0, R::one());
  out.push_back(std::move(U));
  return out;
}

/// Leading N x N section of H^(r;j) = L_{j+1} ... L_r U L_1 ... L_j.
/// Factors are truncated to N + r + 1 before multiplying and the product is
/// cropped to N x N, which keeps truncation artifacts out of the result.
template <class R>
BandedHessenberg<R> hessenberg_product(int r, int j, const AlphaSpec& alpha, int N) {
  if (j < 0 || j > r) throw IndexOutOfRange("need 0 <= j <= r");
  if (N < 1) throw UsageError("need N >= 1");
  int M = N + r + 1;
  auto factors = build_factors<R>(r, alpha, M);
  // factors = (L_1, ..., L_r, U); assemble in the order L_{j+1}..L_r U L_1..L_j
  DenseMatrix<R> acc = DenseMatrix<R>::identity(M);
  for (int k = j + 1; k <= r; ++k) acc = acc * factors[k - 1].dense();
  acc = acc * factors[r].dense();
  for (int k = 1; k <= j; ++k) acc = acc * factors[k - 1].dense();
  return BandedHessenberg<R>::from_dense(r, j, acc, N);
}

/// Same section assembled from the closed-form entry formula instead of the
/// matrix product; the two constructions are mutual oracles.
template <class R>
BandedHessenberg<R> closed_form_entries(int r, int j, const AlphaSpec& alpha, int N) {
  if (j < 0 || j > r) throw IndexOutOfRange("need 0 <= j <= r");
  if (N < 1) throw UsageError("need N >= 1");
  detail::check_explicit_length(alpha, r, N);
  BandedHessenberg<R> h(r, j, N);
  for (int k = 0; k <= r; ++k)
    for (int n = 0; n + k < N; ++n) h.band_entry(k, n) = gamma_coefficient<R>(r, j, alpha, n, k);
  return h;
}

/// The recurrence matrix of the symmetric sequence itself: unit
/// supradiagonal, alpha_n on the r-th subdiagonal, zero elsewhere.
template <class R>
BandedHessenberg<R> symmetric_recurrence_matrix(int r, const AlphaSpec& alpha, int N) {
  BandedHessenberg<R> h(r, -1, N);
  for (int n = 0; n + r < N; ++n) h.band_entry(r, n) = alpha_value<R>(alpha, n);
  return h;
}

}  // namespace bidiag
}  // namespace starhess
