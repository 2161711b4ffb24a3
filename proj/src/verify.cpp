#include "starhess/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "starhess/appell.hpp"
#include "starhess/bidiag.hpp"
#include "starhess/mop.hpp"
#include "starhess/parallel.hpp"
#include "starhess/paths.hpp"
#include "starhess/posspec.hpp"
#include "starhess/prodmat.hpp"

namespace starhess {
namespace verify {

namespace {

using bidiag::BandedHessenberg;
using bidiag::hessenberg_product;

struct Sweep {
  int r_lo = 1, r_hi = 3;
  void restrict_r(std::optional<int> r_only) {
    if (r_only) r_lo = r_hi = *r_only;
  }
};

std::vector<std::pair<int, int>> rj_pairs(const Sweep& s) {
  std::vector<std::pair<int, int>> out;
  for (int r = s.r_lo; r <= s.r_hi; ++r)
    for (int j = 0; j <= r; ++j) out.emplace_back(r, j);
  return out;
}

template <class R>
DenseMatrix<R> to_dense(const prodmat::OutputMatrix<R>& m) {
  DenseMatrix<R> out(m.size, m.size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) out.at(i, j) = m.rows[i][j];
  return out;
}

struct Tally {
  bool pass = true;
  long checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      first_failure = describe();
    }
  }
  void expect(bool ok, const std::string& label) {
    expect(ok, [&] { return label; });
  }
  void merge(const Tally& other) {
    checks += other.checks;
    if (!other.pass && pass) {
      pass = false;
      first_failure = other.first_failure;
    }
  }
};

template <class F>
Tally parallel_tally(size_t n, F&& fn) {
  std::vector<Tally> parts(n);
  parallel_for(n, [&](size_t i) { fn(i, parts[i]); });
  Tally total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

std::string at(int r, int j) { return " at r=" + std::to_string(r) + " j=" + std::to_string(j); }

// 1. Factorised product equals the closed-form entries, symbolically.
Tally criterion_factorisation(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  int N = max_override.value_or(8);
  auto pairs = rj_pairs(sweep);
  auto alpha = AlphaSpec::symbolic();
  return parallel_tally(pairs.size(), [&](size_t i, Tally& t) {
    auto [r, j] = pairs[i];
    auto product = hessenberg_product<MultiPoly>(r, j, alpha, N);
    auto closed = bidiag::closed_form_entries<MultiPoly>(r, j, alpha, N);
    t.expect(product == closed, "product != closed form" + at(r, j));
    t.expect(product.band_structure_ok(), "band structure broken" + at(r, j));
  });
}

// 2. Output matrix of H^(r;j) equals the path-enumerated polynomials.
Tally criterion_production(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  int nmax = max_override.value_or(5);
  auto pairs = rj_pairs(sweep);
  auto alpha = AlphaSpec::symbolic();
  return parallel_tally(pairs.size(), [&](size_t i, Tally& t) {
    auto [r, j] = pairs[i];
    auto H = hessenberg_product<MultiPoly>(r, j, alpha, nmax + 2);
    auto out = prodmat::output_matrix(H, nmax + 1);
    auto table = paths::generalised_sr_table<MultiPoly>(r, j, nmax, nmax, alpha);
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= nmax; ++k)
        t.expect(out.rows[n][k] == table[n][k], [&] {
          return "output != paths" + at(r, j) + " n=" + std::to_string(n) +
                 " k=" + std::to_string(k);
        });
  });
}

// 3. Decomposition components satisfy the gamma recurrence and coincide with
// the characteristic polynomials of H^(r;j).
template <class R>
Tally components_one_ring(int r, int nmax, const AlphaSpec& alpha) {
  Tally t;
  auto S = mop::symmetric_sequence<R>(r, alpha, (r + 1) * nmax + r);
  auto comps = mop::decompose(S);
  for (int j = 0; j <= r; ++j) {
    mop::ComponentSeq<R> c = comps[j];
    c.polys.resize(nmax + 1);
    auto check = mop::verify_component_recurrence(c, alpha);
    t.expect(check.pass, [&] {
      return "gamma recurrence fails" + at(r, j) + " n=" + std::to_string(check.first_fail_n) +
             " residual " + check.residual.str();
    });
    auto H = hessenberg_product<R>(r, j, alpha, nmax);
    auto P = prodmat::poly_sequence_from_hessenberg(H, nmax);
    for (int n = 0; n <= nmax; ++n)
      t.expect(P[n] == c.polys[n], [&] {
        return "component != characteristic polynomial" + at(r, j) + " n=" + std::to_string(n);
      });
    // Decomposition round trip while the components are at hand.
    for (int n = 0; n <= nmax; ++n)
      t.expect(mop::recompose(r, j, c.polys[n]) == S.polys[(r + 1) * n + j],
               "decomposition round trip fails" + at(r, j));
  }
  return t;
}

Tally criterion_components(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  int nmax = max_override.value_or(6);
  std::vector<std::pair<int, bool>> jobs;  // (r, symbolic?)
  for (int r = sweep.r_lo; r <= sweep.r_hi; ++r) {
    jobs.emplace_back(r, true);
    jobs.emplace_back(r, false);
  }
  return parallel_tally(jobs.size(), [&](size_t i, Tally& t) {
    auto [r, symbolic] = jobs[i];
    if (symbolic)
      t.merge(components_one_ring<MultiPoly>(r, nmax, AlphaSpec::symbolic()));
    else
      t.merge(components_one_ring<Rational>(r, nmax, AlphaSpec::appell(r)));
  });
}

// 4. Dual moment matrices: component inverses equal the path table and the
// symmetric inverse carries the fold-symmetry zero pattern.
Tally criterion_dual_moments(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  int nmax = max_override.value_or(6);
  auto alpha = AlphaSpec::symbolic();
  std::vector<int> rs;
  for (int r = sweep.r_lo; r <= sweep.r_hi; ++r) rs.push_back(r);
  return parallel_tally(rs.size(), [&](size_t i, Tally& t) {
    int r = rs[i];
    auto S = mop::symmetric_sequence<MultiPoly>(r, alpha, (r + 1) * nmax + r);
    auto comps = mop::decompose(S);
    for (int j = 0; j <= r; ++j) {
      auto polys = comps[j].polys;
      polys.resize(nmax + 1);
      auto A = prodmat::dual_moment_matrix(polys, nmax + 1);
      auto table = paths::generalised_sr_table<MultiPoly>(r, j, nmax, nmax, alpha);
      for (int n = 0; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k)
          t.expect(A.rows[n][k] == table[n][k], [&] {
            return "dual moments != paths" + at(r, j) + " n=" + std::to_string(n) +
                   " k=" + std::to_string(k);
          });
    }
    auto sym = mop::dual_moments_symmetric<MultiPoly>(r, alpha, (r + 1) * nmax + r + 1);
    t.expect(sym.zero_pattern_ok, "fold-symmetry zero pattern broken at r=" + std::to_string(r));
    t.expect(sym.oracle_ok, "symmetric dual moments != paths at r=" + std::to_string(r));
  });
}

// 5. Catalan and Fuss-Catalan specialisations at alpha = 1.
Tally criterion_golden(std::optional<int> r_only, std::optional<int>) {
  Tally t;
  auto alpha = AlphaSpec::ones(64);
  auto expect_seq = [&](int r, const std::vector<long>& want) {
    if (r_only && *r_only != r) return;
    for (size_t n = 0; n < want.size(); ++n) {
      Rational got = paths::modified_sr<Rational>(r, 0, static_cast<int>(n), alpha);
      t.expect(got == Rational(want[n]), [&] {
        return "count sequence r=" + std::to_string(r) + " n=" + std::to_string(n) + ": got " +
               got.str() + ", want " + std::to_string(want[n]);
      });
      // Cross-check the closed-form count (r n + 1)^-1 C((r+1)n, n).
      Rational formula = Rational(mpz_class(binomial((r + 1) * n, n)), mpz_class(r * n + 1));
      t.expect(got == formula, "count formula mismatch at r=" + std::to_string(r));
    }
  };
  expect_seq(1, {1, 1, 2, 5, 14, 42});
  expect_seq(2, {1, 1, 3, 12, 55});
  expect_seq(3, {1, 1, 4, 22, 140});
  return t;
}

// 6. Genetic sums equal the modified polynomials, symbolically.
Tally criterion_genetic(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  int nmax = max_override.value_or(5);
  auto alpha = AlphaSpec::symbolic();
  Tally t;
  for (int r = sweep.r_lo; r <= sweep.r_hi; ++r)
    for (int j = 0; j <= r - 1; ++j)
      for (int n = 0; n <= nmax; ++n)
        t.expect(paths::genetic_sum<MultiPoly>(r, n, j, alpha) ==
                     paths::modified_sr<MultiPoly>(r, j, n, alpha),
                 [&] { return "genetic sum != modified polynomial" + at(r, j) +
                              " n=" + std::to_string(n); });
  return t;
}

// 7. Total positivity: coefficientwise for symbolic blocks, sign-exact for
// the rational blocks at the hypergeometric alpha.
Tally criterion_tp(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  auto pairs = rj_pairs(sweep);
  int sym_block = 6, sym_order = 3;
  int rat_block = max_override.value_or(8);
  return parallel_tally(pairs.size(), [&](size_t i, Tally& t) {
    auto [r, j] = pairs[i];
    auto sym = AlphaSpec::symbolic();
    auto H6 = hessenberg_product<MultiPoly>(r, j, sym, sym_block).dense();
    t.expect(posspec::tp_check(H6, sym_block, sym_order, false).all_nonnegative,
             "H minors not coefficientwise nonnegative" + at(r, j));
    auto S6 = to_dense(
        prodmat::output_matrix(hessenberg_product<MultiPoly>(r, j, sym, sym_block + 1), sym_block));
    t.expect(posspec::tp_check(S6, sym_block, sym_order, false).all_nonnegative,
             "S minors not coefficientwise nonnegative" + at(r, j));

    auto app = AlphaSpec::appell(r);
    auto H8 = hessenberg_product<Rational>(r, j, app, rat_block).dense();
    t.expect(posspec::tp_check(H8, rat_block, rat_block, false).all_nonnegative,
             "H minors not nonnegative" + at(r, j));
    auto S8 = to_dense(
        prodmat::output_matrix(hessenberg_product<Rational>(r, j, app, rat_block + 1), rat_block));
    t.expect(posspec::tp_check(S8, rat_block, rat_block, false).all_nonnegative,
             "S minors not nonnegative" + at(r, j));
  });
}

// 8. Root isolation and interlacing for the components at the hypergeometric
// alpha; boxes of width at most 2^-30, certification exact.
Tally criterion_zeros(std::optional<int> r_only, std::optional<int> max_override) {
  int nmax = max_override.value_or(8);
  Rational width = Rational(mpz_class(1), mpz_class(mpz_class(1) << 30));
  std::vector<std::pair<int, int>> pairs;
  for (int r = 2; r <= 3; ++r)
    for (int j = 0; j <= r; ++j)
      if (!r_only || *r_only == r) pairs.emplace_back(r, j);
  return parallel_tally(pairs.size(), [&](size_t i, Tally& t) {
    auto [r, j] = pairs[i];
    auto S = mop::symmetric_sequence<Rational>(r, AlphaSpec::appell(r), (r + 1) * nmax + r);
    auto comp = mop::decompose(S)[j];
    std::vector<std::vector<posspec::RootBox>> boxes(nmax + 1);
    for (int n = 1; n <= nmax; ++n) {
      boxes[n] = posspec::isolate_positive_simple_roots(comp.polys[n], width);
      t.expect(static_cast<int>(boxes[n].size()) == n,
               "root count mismatch" + at(r, j) + " n=" + std::to_string(n));
      for (const auto& b : boxes[n]) {
        t.expect(b.width() <= width, "box too wide" + at(r, j));
        t.expect(posspec::poly_eval(comp.polys[n], b.lo).sign() *
                         posspec::poly_eval(comp.polys[n], b.hi).sign() ==
                     -1,
                 "no sign change across box" + at(r, j));
      }
    }
    for (int n = 0; n + 1 <= nmax; ++n)
      t.expect(posspec::interlacing_check(comp.polys[n], boxes[n], comp.polys[n + 1],
                                          boxes[n + 1]),
               "interlacing fails" + at(r, j) + " n=" + std::to_string(n));
  });
}

// 9. Oscillation criterion on the leading blocks at the hypergeometric alpha.
Tally criterion_oscillation(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  int nmax = max_override.value_or(6);
  auto pairs = rj_pairs(sweep);
  return parallel_tally(pairs.size(), [&](size_t i, Tally& t) {
    auto [r, j] = pairs[i];
    auto H = hessenberg_product<Rational>(r, j, AlphaSpec::appell(r), nmax).dense();
    for (int n = 1; n <= nmax; ++n)
      t.expect(posspec::oscillation_check(H.leading(n)),
               "oscillation criterion fails" + at(r, j) + " n=" + std::to_string(n));
  });
}

// 10. The explicit hypergeometric example.
Tally criterion_appell(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  int max_deg = max_override.value_or(24);
  int moment_n = 8;
  std::vector<int> rs;
  for (int r = sweep.r_lo; r <= sweep.r_hi; ++r) rs.push_back(r);
  return parallel_tally(rs.size(), [&](size_t i, Tally& t) {
    int r = rs[i];
    auto seq = mop::symmetric_sequence<Rational>(r, AlphaSpec::appell(r), max_deg);
    for (int d = 0; d <= max_deg; ++d) {
      int n = d / (r + 1), j = d % (r + 1);
      auto hyper = appell::hypergeometric_poly(r, n, j);
      t.expect(hyper == seq.polys[d],
               "hypergeometric form != recurrence at r=" + std::to_string(r) +
                   " degree=" + std::to_string(d));
      UniPoly<Rational> rebuilt;
      for (int k = 0; k <= n; ++k)
        rebuilt += UniPoly<Rational>::monomial(appell::explicit_coeff(r, n, k, j),
                                               (r + 1) * k + j);
      t.expect(rebuilt == hyper, "explicit coefficients do not rebuild the polynomial at r=" +
                                     std::to_string(r) + " degree=" + std::to_string(d));
    }
    auto check = appell::verify(r, max_deg);
    t.expect(check.pass, [&] {
      return check.what + " fails at r=" + std::to_string(r) +
             " n=" + std::to_string(check.first_fail_n);
    });
    if (r == 1) {
      UniPoly<Rational> hermite3(
          std::vector<Rational>{Rational(0), Rational(-3, 2), Rational(0), Rational(1)});
      t.expect(seq.polys[3] == hermite3, "r=1 P_3 is not the monic Hermite polynomial");
    }
    // Moment identity and the star moment pattern.
    auto alpha = AlphaSpec::appell(r);
    for (int j = 1; j <= r; ++j) {
      auto mom = appell::moments(r, j, moment_n);
      auto table = paths::generalised_sr_table<Rational>(r, j - 1, moment_n, 0, alpha);
      for (int n = 0; n <= moment_n; ++n)
        t.expect(mom.moments[n] == table[n][0], [&] {
          return "moment != path value" + at(r, j) + " n=" + std::to_string(n);
        });
      for (long m = 0; m <= (r + 1) * 4; ++m) {
        Rational sm = mop::star_moment<Rational>(r, j, m, alpha);
        bool congruent = (m - (j - 1)) % (r + 1) == 0;
        if (!congruent) {
          t.expect(sm.is_zero(), "star moment nonzero off the congruence class" + at(r, j));
        } else {
          long n = (m - (j - 1)) / (r + 1);
          t.expect(n > moment_n || sm == mom.moments[n],
                   "star moment != measure moment" + at(r, j));
        }
      }
    }
    // Parameter multiset identity {a_1,...,a_r, 1} = {a^_1,...,a^_{r+1}}.
    for (int rr = sweep.r_lo; rr <= 4 && i == 0; ++rr)
      for (int j = 0; j <= rr; ++j) {
        auto a = appell::params(rr, j);
        a.push_back(Rational::one());
        std::vector<Rational> hat;
        for (int k = 1; k <= rr + 1; ++k) hat.push_back(appell::param_hat(rr, k, j));
        std::sort(a.begin(), a.end());
        std::sort(hat.begin(), hat.end());
        t.expect(a == hat, "parameter multiset identity fails at r=" + std::to_string(rr) +
                               " j=" + std::to_string(j));
      }
  });
}

// 11. Orthogonality reports for the symmetric sequence and every component.
Tally criterion_orthogonality(std::optional<int> r_only, std::optional<int> max_override) {
  Sweep sweep;
  sweep.restrict_r(r_only);
  auto pairs = rj_pairs(sweep);
  std::vector<int> rs;
  for (int r = sweep.r_lo; r <= sweep.r_hi; ++r) rs.push_back(r);
  Tally total;

  Tally sym = parallel_tally(rs.size(), [&](size_t i, Tally& t) {
    int r = rs[i];
    int max_n = max_override.value_or(3 * (r + 1));
    auto alpha = AlphaSpec::appell(r);
    auto P = mop::symmetric_sequence<Rational>(r, alpha, max_n).polys;
    auto functionals = mop::symmetric_functionals<Rational>(r, alpha, 2 * max_n + 1);
    auto report = mop::orthogonality_check(P, functionals, r, max_n);
    t.checks += static_cast<long>(report.entries.size());
    t.expect(report.pass, [&] {
      for (const auto& e : report.entries)
        if (!e.pass)
          return "symmetric orthogonality fails at r=" + std::to_string(r) +
                 " functional=" + std::to_string(e.functional) + " k=" + std::to_string(e.k) +
                 " n=" + std::to_string(e.n) + " value=" + e.value;
      return std::string("symmetric orthogonality fails");
    });
    t.expect(!report.entries.empty(), "no orthogonality conditions checked");
  });
  total.merge(sym);

  Tally comp = parallel_tally(pairs.size(), [&](size_t i, Tally& t) {
    auto [r, j] = pairs[i];
    int max_n = max_override.value_or(6);
    auto alpha = AlphaSpec::appell(r);
    auto S = mop::symmetric_sequence<Rational>(r, alpha, (r + 1) * max_n + j);
    auto polys = mop::decompose(S)[j].polys;
    polys.resize(max_n + 1);
    auto functionals = mop::component_functionals<Rational>(r, j, alpha, 2 * max_n + 1);
    auto report = mop::orthogonality_check(polys, functionals, r, max_n);
    t.checks += static_cast<long>(report.entries.size());
    t.expect(report.pass, [&] {
      for (const auto& e : report.entries)
        if (!e.pass)
          return "component orthogonality fails" + at(r, j) +
                 " functional=" + std::to_string(e.functional) + " k=" + std::to_string(e.k) +
                 " n=" + std::to_string(e.n) + " value=" + e.value;
      return std::string("component orthogonality fails");
    });
  });
  total.merge(comp);
  return total;
}

struct Criterion {
  int id;
  std::string name;
  Tally (*fn)(std::optional<int>, std::optional<int>);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1, "factorisation", criterion_factorisation},
      {2, "production", criterion_production},
      {3, "components", criterion_components},
      {4, "dual-moments", criterion_dual_moments},
      {5, "golden", criterion_golden},
      {6, "genetic", criterion_genetic},
      {7, "tp", criterion_tp},
      {8, "zeros", criterion_zeros},
      {9, "oscillation", criterion_oscillation},
      {10, "appell", criterion_appell},
      {11, "orthogonality", criterion_orthogonality},
  };
  return table;
}

}  // namespace

const std::vector<std::pair<int, std::string>>& catalogue() {
  static const std::vector<std::pair<int, std::string>> names = [] {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& c : criteria()) out.emplace_back(c.id, c.name);
    return out;
  }();
  return names;
}

int id_for_name(const std::string& name) {
  for (const auto& c : criteria())
    if (c.name == name) return c.id;
  throw UsageError("unknown verification suite '" + name + "'");
}

CriterionResult run_criterion(int id, std::optional<int> r_only,
                              std::optional<int> max_override) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    auto start = std::chrono::steady_clock::now();
    Tally t = c.fn(r_only, max_override);
    auto stop = std::chrono::steady_clock::now();
    CriterionResult res;
    res.id = c.id;
    res.name = c.name;
    res.pass = t.pass;
    std::ostringstream os;
    os << t.checks << " checks";
    if (!t.pass) os << "; first failure: " << t.first_failure;
    res.detail = os.str();
    res.seconds = std::chrono::duration<double>(stop - start).count();
    return res;
  }
  throw UsageError("unknown verification suite id " + std::to_string(id));
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c.id));
  return out;
}

}  // namespace verify
}  // namespace starhess
