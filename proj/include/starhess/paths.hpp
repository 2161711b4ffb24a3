#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starhess/alpha.hpp"
#include "starhess/errors.hpp"

namespace starhess {
namespace paths {

/// Lattice point (x, y) in N x N.
struct Point {
  long x = 0;
  long y = 0;
};

/// Generating polynomial of the partial r-Dyck paths from start to end:
/// every rise weighs one, every r-fall to height i weighs alpha_i.  The ring
/// zero is returned when no such path exists.
template <class R>
R dyck_generating_poly(int r, Point start, Point end, const AlphaSpec& alpha) {
  if (r < 1) throw UsageError("need r >= 1");
  if (start.x < 0 || start.y < 0 || end.y < 0) throw UsageError("lattice points live in N x N");
  R total = R::zero();
  if (end.x < start.x) return total;
  long dx = end.x - start.x;
  long dy = end.y - start.y;
  long falls_excess = dx - dy;
  if (falls_excess < 0 || falls_excess % (r + 1) != 0) return total;

  // Plain DFS over step choices with height pruning; this module is the
  // brute-force oracle, so no memoisation.
  auto dfs = [&](auto&& self, long x, long y, const R& acc) -> void {
    if (x == end.x) {
      if (y == end.y) total += acc;
      return;
    }
    long remaining = end.x - x;
    long deficit = remaining - (end.y - y);
    if (deficit < 0 || deficit % (r + 1) != 0) return;   // parity or too low to matter
    if (y - static_cast<long>(r) * remaining > end.y) return;  // cannot descend in time
    self(self, x + 1, y + 1, acc);
    if (y >= r) {
      R w = acc * alpha_value<R>(alpha, y - r);
      self(self, x + 1, y - r, w);
    }
  };
  dfs(dfs, start.x, start.y, R::one());
  return total;
}

/// Generalised r-Stieltjes-Rogers polynomial of type j: the generating
/// polynomial of partial r-Dyck paths from (0,0) to ((r+1)n+j, (r+1)k+j).
template <class R>
R generalised_sr(int r, int j, int n, int k, const AlphaSpec& alpha) {
  if (j < 0 || n < 0 || k < 0) throw UsageError("need j, n, k >= 0");
  long m = r + 1;
  return dyck_generating_poly<R>(r, {0, 0}, {m * n + j, m * k + j}, alpha);
}

/// All values S^(r;j)_{n,k} for n <= N, k <= K from a single enumeration of
/// path prefixes; exactly the same path set as generalised_sr entry by entry.
template <class R>
std::vector<std::vector<R>> generalised_sr_table(int r, int j, int N, int K,
                                                 const AlphaSpec& alpha) {
  if (r < 1 || j < 0 || N < 0 || K < 0) throw UsageError("bad table bounds");
  long m = r + 1;
  long x_max = m * N + j;
  long y_useful = m * K + j;
  std::vector<std::vector<R>> table(N + 1, std::vector<R>(K + 1, R::zero()));
  auto dfs = [&](auto&& self, long x, long y, const R& acc) -> void {
    if ((x - j) % m == 0 && (y - j) % m == 0 && x >= j && y >= j && y <= y_useful) {
      long n = (x - j) / m, k = (y - j) / m;
      if (n <= N && k <= K && n >= 0 && k >= 0) table[n][k] += acc;
    }
    if (x >= x_max) return;
    long remaining = x_max - x;
    if (y - static_cast<long>(r) * remaining > y_useful) return;
    self(self, x + 1, y + 1, acc);
    if (y >= r) {
      R w = acc * alpha_value<R>(alpha, y - r);
      self(self, x + 1, y - r, w);
    }
  };
  dfs(dfs, 0, 0, R::one());
  return table;
}

/// Modified r-Stieltjes-Rogers polynomial of type j (the k = 0 case).
template <class R>
R modified_sr(int r, int j, int n, const AlphaSpec& alpha) {
  if (j < 0 || j > r) throw IndexOutOfRange("need 0 <= j <= r");
  return generalised_sr<R>(r, j, n, 0, alpha);
}

/// The nested sum S_{n,j+1} = sum_{i1=0}^{j} sum_{i2=0}^{i1+r} ...
/// sum_{in=0}^{i_{n-1}+r} alpha_{i1} ... alpha_{in}; equals the modified
/// polynomial of type j.
template <class R>
R genetic_sum(int r, int n, int j, const AlphaSpec& alpha) {
  if (j < 0 || j > r - 1) throw IndexOutOfRange("need 0 <= j <= r-1");
  if (n < 0) throw UsageError("need n >= 0");
  auto rec = [&](auto&& self, int depth, long upper) -> R {
    if (depth > n) return R::one();
    R acc = R::zero();
    for (long i = 0; i <= upper; ++i)
      acc += alpha_value<R>(alpha, i) * self(self, depth + 1, i + r);
    return acc;
  };
  if (n == 0) return R::one();
  return rec(rec, 1, j);
}

/// Weight table for r-Lukasiewicz paths: entry (l, i) is the weight of a
/// step (1,-l) landing at height i, for 0 <= l <= r.  Heights beyond the
/// supplied bound raise rather than defaulting to zero.
template <class R>
class GammaTable {
 public:
  GammaTable(int r, std::vector<std::vector<R>> weights) : r_(r), w_(std::move(weights)) {
    if (static_cast<int>(w_.size()) != r + 1)
      throw UsageError("gamma table needs one row per fall size 0..r");
  }

  int r() const { return r_; }

  const R& weight(int l, int i) const {
    if (l < 0 || l > r_) throw IndexOutOfRange("fall size outside 0..r");
    if (i < 0 || i >= static_cast<int>(w_[l].size())) throw GammaHeightExceeded(i);
    return w_[l][i];
  }

 private:
  int r_;
  std::vector<std::vector<R>> w_;
};

/// Generalised r-Jacobi-Rogers polynomial: generating polynomial of partial
/// r-Lukasiewicz paths from (0,0) to (n,k); rises weigh one, a step (1,-l)
/// to height i weighs gamma(l, i).
template <class R>
R jacobi_rogers_generalised(int r, int n, int k, const GammaTable<R>& gamma) {
  if (r < 1 || n < 0 || k < 0) throw UsageError("need r >= 1 and n, k >= 0");
  R total = R::zero();
  auto dfs = [&](auto&& self, long x, long y, const R& acc) -> void {
    if (x == n) {
      if (y == k) total += acc;
      return;
    }
    long remaining = n - x;
    if (y + remaining < k) return;
    if (y - static_cast<long>(r) * remaining > k) return;
    self(self, x + 1, y + 1, acc);
    for (int l = 0; l <= r; ++l) {
      if (y - l < 0) break;
      R w = acc * gamma.weight(l, static_cast<int>(y - l));
      self(self, x + 1, y - l, w);
    }
  };
  dfs(dfs, 0, 0, R::one());
  return total;
}

/// Explicit listing of the partial r-Dyck paths from start to end as step
/// strings ("R" rise, "F" fall).  Exponential; intended for small CLI runs.
std::vector<std::vector<std::string>> list_dyck_paths(int r, Point start, Point end);

}  // namespace paths
}  // namespace starhess
