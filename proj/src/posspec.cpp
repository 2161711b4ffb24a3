#include "starhess/posspec.hpp"

#include <algorithm>
#include <utility>

namespace starhess {
namespace posspec {

namespace detail {

Rational det_bareiss(DenseMatrix<Rational> m) {
  // Fraction-free elimination with row-swap pivoting; every division is
  // exact.  The determinant is the last pivot up to the swap sign.
  size_t n = m.rows();
  if (n == 0) return Rational::one();
  Rational prev = Rational::one();
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      size_t swap = k + 1;
      while (swap < n && m.at(swap, k).is_zero()) ++swap;
      if (swap == n) return Rational::zero();  // zero column below the pivot
      for (size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  Rational det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

std::vector<std::vector<int>> index_subsets(int m, int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(order);
  for (int i = 0; i < order; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = order - 1;
    while (i >= 0 && cur[i] == m - order + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int t = i + 1; t < order; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

}  // namespace detail

bool oscillation_check(const DenseMatrix<Rational>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw UsageError("need a nonempty square matrix");
  int n = static_cast<int>(m.rows());
  for (int i = 0; i + 1 < n; ++i) {
    if (m.at(i + 1, i).sign() <= 0) return false;
    if (m.at(i, i + 1).sign() <= 0) return false;
  }
  if (detail::det_bareiss(m).is_zero()) return false;
  return tp_check(m, n, n, /*keep_reports=*/false).all_nonnegative;
}

RatPoly poly_derivative(const RatPoly& p) { return differentiate(p); }

Rational poly_eval(const RatPoly& p, const Rational& x) { return p.eval(x); }

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw Error("polynomial division by zero");
  RatPoly rem = num;
  std::vector<Rational> quot(std::max(0, num.degree() - den.degree() + 1), Rational::zero());
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rational factor = rem.leading() / den.leading();
    quot[shift] = factor;
    rem -= factor * den.times_x_power(shift);
  }
  return {RatPoly(std::move(quot)), std::move(rem)};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv_lead = Rational::one() / a.leading();  // monic normalisation
  return inv_lead * a;
}

namespace {

// Sturm chain of a squarefree polynomial; each element is rescaled by a
// positive rational to keep coefficient growth down (sign-safe).
struct SturmChain {
  std::vector<RatPoly> seq;

  explicit SturmChain(const RatPoly& p) {
    seq.push_back(normalise(p));
    RatPoly d = poly_derivative(p);
    if (!d.is_zero()) seq.push_back(normalise(d));
    while (seq.size() >= 2) {
      RatPoly r = poly_divmod(seq[seq.size() - 2], seq.back()).second;
      if (r.is_zero()) break;
      seq.push_back(normalise(-r));
    }
  }

  static RatPoly normalise(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rational scale = Rational::one() / p.leading().abs();
    return scale * p;
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& s : seq) {
      int sg = poly_eval(s, x).sign();
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  /// Number of distinct roots in (a, b]; requires p(a) != 0.
  int count(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
  }
};

Rational cauchy_root_bound(const RatPoly& p) {
  Rational best = Rational::zero();
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = p.coeff(i).abs() / p.leading().abs();
    if (q > best) best = q;
  }
  return best + Rational(1);
}

// A point in (lo, hi) where p does not vanish; tries the midpoint first and
// then nudges dyadically (p has finitely many roots, so this terminates).
Rational non_root_point(const RatPoly& p, const Rational& lo, const Rational& hi) {
  Rational half(1, 2);
  Rational mid = (lo + hi) * half;
  if (!poly_eval(p, mid).is_zero()) return mid;
  Rational step = (hi - lo) * Rational(1, 4);
  while (true) {
    Rational cand = mid + step;
    if (cand < hi && !poly_eval(p, cand).is_zero()) return cand;
    cand = mid - step;
    if (cand > lo && !poly_eval(p, cand).is_zero()) return cand;
    step *= half;
  }
}

// One bisection step on a box holding exactly one simple root with opposite
// endpoint signs; preserves that invariant.
RootBox bisect_once(const RatPoly& p, const RootBox& box) {
  Rational half(1, 2);
  Rational mid = (box.lo + box.hi) * half;
  int sm = poly_eval(p, mid).sign();
  if (sm == 0) {
    // The root is exactly mid; clamp a thin interval around it.
    Rational delta = std::min(mid - box.lo, box.hi - mid) * Rational(1, 4);
    return {mid - delta, mid + delta};
  }
  int slo = poly_eval(p, box.lo).sign();
  if (slo == sm) return {mid, box.hi};
  return {box.lo, mid};
}

RootBox refine_to_width(const RatPoly& p, RootBox box, const Rational& width) {
  while (box.width() > width) box = bisect_once(p, box);
  return box;
}

const Rational& separation_floor() {
  static const Rational floor(mpz_class(1), mpz_class(mpz_class(1) << 256));
  return floor;
}

}  // namespace

std::vector<RootBox> isolate_positive_simple_roots(const RatPoly& p, const Rational& width) {
  if (p.degree() < 1) throw UsageError("need a nonconstant polynomial");
  if (width.sign() <= 0) throw UsageError("need a positive width");

  if (poly_gcd(p, poly_derivative(p)).degree() > 0) throw NotSquarefree();

  if (poly_eval(p, Rational::zero()).is_zero()) {
    // A root at the origin already violates positivity; report the count of
    // the remaining positive roots.
    RatPoly q = p;
    while (poly_eval(q, Rational::zero()).is_zero()) q = poly_divmod(q, RatPoly::x()).first;
    int positive = 0;
    if (q.degree() >= 1) {
      SturmChain chain(q);
      positive = chain.count(Rational::zero(), cauchy_root_bound(q));
    }
    throw RootsNotAllPositive(positive);
  }

  SturmChain chain(p);
  Rational bound = cauchy_root_bound(p);
  int total = chain.count(Rational::zero(), bound);
  if (total != p.degree()) throw RootsNotAllPositive(total);

  std::vector<RootBox> boxes;
  auto split = [&](auto&& self, const Rational& lo, const Rational& hi, int count) -> void {
    if (count == 0) return;
    if (count == 1) {
      boxes.push_back({lo, hi});
      return;
    }
    Rational mid = non_root_point(p, lo, hi);
    int left = chain.count(lo, mid);
    self(self, lo, mid, left);
    self(self, mid, hi, count - left);
  };
  split(split, Rational::zero(), bound, total);

  for (auto& box : boxes) {
    // Boxes from the split can touch; shrink by sign bisection, which keeps
    // the single contained root and eventually separates them.
    box = refine_to_width(p, box, width);
  }
  for (size_t i = 0; i + 1 < boxes.size(); ++i)
    while (!(boxes[i].hi <= boxes[i + 1].lo)) {
      boxes[i] = bisect_once(p, boxes[i]);
      boxes[i + 1] = bisect_once(p, boxes[i + 1]);
      if (boxes[i].width() < separation_floor()) throw CannotSeparate();
    }
  return boxes;
}

bool interlacing_check(const RatPoly& p_n, std::vector<RootBox> boxes_n, const RatPoly& p_next,
                       std::vector<RootBox> boxes_next) {
  if (boxes_next.size() != boxes_n.size() + 1)
    throw UsageError("interlacing needs one more root in the second sequence");
  if (boxes_n.empty()) return true;  // single root against nothing

  // A shared root makes strict interlacing impossible and is decidable
  // exactly, so settle it before any refinement.
  if (poly_gcd(p_n, p_next).degree() > 0) return false;

  // Required strict order: next_0 < n_0 < next_1 < ... < n_last < next_last+1.
  struct Slot {
    const RatPoly* poly;
    RootBox* box;
  };
  std::vector<Slot> chain;
  for (size_t i = 0; i < boxes_n.size(); ++i) {
    chain.push_back({&p_next, &boxes_next[i]});
    chain.push_back({&p_n, &boxes_n[i]});
  }
  chain.push_back({&p_next, &boxes_next.back()});

  while (true) {
    bool ordered = true;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      RootBox& a = *chain[i].box;
      RootBox& b = *chain[i + 1].box;
      if (a.hi <= b.lo) continue;     // this adjacent pair is settled
      if (b.hi <= a.lo) return false;  // disjoint in the wrong order: violation
      ordered = false;
      if (a.width() < separation_floor() && b.width() < separation_floor())
        throw CannotSeparate();
      *chain[i].box = bisect_once(*chain[i].poly, a);
      *chain[i + 1].box = bisect_once(*chain[i + 1].poly, b);
    }
    if (ordered) return true;
  }
}

RootBox nth_root_bounds(const Rational& c, int m, const Rational& width) {
  if (c.sign() < 0) throw UsageError("nth root of a negative value");
  if (m < 1) throw UsageError("need m >= 1");
  Rational lo = Rational::zero();
  Rational hi = c > Rational(1) ? c : Rational(1);
  Rational half(1, 2);
  while (hi - lo > width) {
    Rational mid = (lo + hi) * half;
    if (mid.pow(m) <= c)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

std::vector<StarZero> star_zero_map(int r, int j, const std::vector<RootBox>& boxes,
                                    const Rational& width) {
  if (r < 1 || j < 0 || j > r) throw UsageError("need r >= 1 and 0 <= j <= r");
  std::vector<StarZero> out;
  for (const auto& box : boxes) {
    Rational radius_lo = nth_root_bounds(box.lo, r + 1, width).lo;
    Rational radius_hi = nth_root_bounds(box.hi, r + 1, width).hi;
    for (int ray = 0; ray <= r; ++ray) out.push_back({ray, {radius_lo, radius_hi}, j});
  }
  return out;
}

}  // namespace posspec
}  // namespace starhess
