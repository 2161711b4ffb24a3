#pragma once

#include <vector>

#include "starhess/bidiag.hpp"
#include "starhess/errors.hpp"
#include "starhess/paths.hpp"
#include "starhess/unipoly.hpp"

namespace starhess {
namespace prodmat {

template <class R>
using PolySeq = std::vector<UniPoly<R>>;

/// Output matrix rows a_{n,k} = (H^n)_{0,k} for n, k < size.
template <class R>
struct OutputMatrix {
  int size = 0;
  std::vector<std::vector<R>> rows;  // size x size, dense

  friend bool operator==(const OutputMatrix& a, const OutputMatrix& b) {
    return a.size == b.size && a.rows == b.rows;
  }
};

/// Lower unit-triangular matrix; row n stores the entries for columns 0..n.
template <class R>
struct TriangularMatrix {
  int size = 0;
  std::vector<std::vector<R>> rows;

  R entry(int n, int k) const {
    if (n < 0 || k < 0 || n >= size || k >= size) throw IndexOutOfRange("entry outside matrix");
    if (k > n) return R::zero();
    return rows[n][k];
  }

  DenseMatrix<R> dense() const {
    DenseMatrix<R> m(size, size);
    for (int n = 0; n < size; ++n)
      for (int k = 0; k <= n; ++k) m.at(n, k) = rows[n][k];
    return m;
  }

  friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) {
    return a.size == b.size && a.rows == b.rows;
  }
};

/// Rows 0..M-1 of the output matrix of H, built row by row as row_n =
/// row_{n-1} * H.  A walk of at most M steps from index 0 can reach index M,
/// hence the truncation precondition.
template <class R>
OutputMatrix<R> output_matrix(const bidiag::BandedHessenberg<R>& H, int M) {
  if (M < 1) throw UsageError("need M >= 1");
  if (H.size() < M + 1)
    throw TruncationTooSmall("output matrix of " + std::to_string(M) +
                             " rows needs truncation size >= " + std::to_string(M + 1));
  OutputMatrix<R> out;
  out.size = M;
  out.rows.assign(M, std::vector<R>(M, R::zero()));
  out.rows[0][0] = R::one();
  for (int n = 1; n < M; ++n) {
    for (int k = 0; k < M; ++k) {
      R acc = R::zero();
      for (int d = -1; d <= H.r(); ++d) {
        int i = k + d;  // step i -> k exists when d = i - k is within the band
        if (i < 0 || i >= M) continue;
        const R& prev = out.rows[n - 1][i];
        if (prev.is_zero()) continue;
        acc += prev * H.entry(i, k);
      }
      out.rows[n][k] = std::move(acc);
    }
  }
  return out;
}

/// Monic polynomials P_0 = 1, ..., P_M with x P = H P read row by row; P_n is
/// the characteristic polynomial of the leading n x n section of H.
template <class R>
PolySeq<R> poly_sequence_from_hessenberg(const bidiag::BandedHessenberg<R>& H, int M) {
  if (M < 0) throw UsageError("need M >= 0");
  if (H.size() < M)
    throw TruncationTooSmall("sequence up to P_" + std::to_string(M) +
                             " needs truncation size >= " + std::to_string(M));
  PolySeq<R> P;
  P.reserve(M + 1);
  P.push_back(UniPoly<R>::one());
  for (int n = 0; n < M; ++n) {
    UniPoly<R> next = P[n].times_x_power(1);
    for (int d = 0; d <= H.r(); ++d) {
      int k = n - d;
      if (k < 0) break;
      const R& h = H.entry(n, k);
      if (!h.is_zero()) next -= h * P[k];
    }
    P.push_back(std::move(next));
  }
  return P;
}

/// Coefficient matrix of a monic sequence P_0, ..., P_{M-1} with deg P_n = n;
/// throws NotMonic when the shape is off.
template <class R>
TriangularMatrix<R> coefficient_matrix(const PolySeq<R>& P) {
  TriangularMatrix<R> B;
  B.size = static_cast<int>(P.size());
  B.rows.resize(B.size);
  for (int n = 0; n < B.size; ++n) {
    if (P[n].degree() != n || !P[n].is_monic()) throw NotMonic(n);
    B.rows[n].reserve(n + 1);
    for (int k = 0; k <= n; ++k) B.rows[n].push_back(P[n].coeff(k));
  }
  return B;
}

/// Inverse of a lower unit-triangular matrix by forward substitution;
/// truncation-exact because of the triangular shape.
template <class R>
TriangularMatrix<R> invert_unit_lower(const TriangularMatrix<R>& B) {
  TriangularMatrix<R> A;
  A.size = B.size;
  A.rows.resize(A.size);
  for (int n = 0; n < A.size; ++n) {
    A.rows[n].assign(n + 1, R::zero());
    A.rows[n][n] = R::one();
    for (int k = 0; k < n; ++k) {
      R acc = R::zero();
      for (int m = k; m < n; ++m) {
        const R& b = B.rows[n][m];
        if (!b.is_zero()) acc += b * A.rows[m][k];
      }
      A.rows[n][k] = -acc;
    }
  }
  return A;
}

/// Moment matrix of the dual sequence of P: the inverse of the coefficient
/// matrix of P_0, ..., P_{M-1}.
template <class R>
TriangularMatrix<R> dual_moment_matrix(const PolySeq<R>& P, int M) {
  if (static_cast<int>(P.size()) < M) throw TruncationTooSmall("need M polynomials");
  PolySeq<R> head(P.begin(), P.begin() + M);
  return invert_unit_lower(coefficient_matrix(head));
}

/// The (r+2)-banded unit-lower-Hessenberg matrix with h_{n+k,n} = gamma(k, n),
/// the production matrix of the generalised r-Jacobi-Rogers polynomials.
template <class R>
bidiag::BandedHessenberg<R> hessenberg_from_gamma(int r, const paths::GammaTable<R>& gamma,
                                                  int N) {
  bidiag::BandedHessenberg<R> h(r, -1, N);
  for (int k = 0; k <= r; ++k)
    for (int n = 0; n + k < N; ++n) h.band_entry(k, n) = gamma.weight(k, n);
  return h;
}

}  // namespace prodmat
}  // namespace starhess
