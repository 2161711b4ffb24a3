#include "starhess/appell.hpp"

#include "starhess/alpha.hpp"
#include "starhess/errors.hpp"
#include "starhess/mop.hpp"

namespace starhess {
namespace appell {

namespace {

// ceil(a / b) for b > 0.
mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Q_n(x) = c^{-n} P_n(c x).
UniPoly<Rational> scale_family(const UniPoly<Rational>& p, int n, const Rational& c) {
  std::vector<Rational> out;
  out.reserve(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k) * c.pow(k - n));
  return UniPoly<Rational>(std::move(out));
}

}  // namespace

Rational alpha(int r, long k) { return appell_alpha(r, k); }

std::vector<Rational> params(int r, int j) {
  if (r < 1 || j < 0 || j > r) throw UsageError("need r >= 1 and 0 <= j <= r");
  std::vector<Rational> out;
  out.reserve(r);
  for (int i = 1; i <= r; ++i) {
    long num = (i <= r - j) ? (i + j) : (i + j + 1);
    out.push_back(Rational(num, r + 1));
  }
  return out;
}

Rational param_extended(int r, int i, long K) {
  if (i < 1 || i > r + 1 || K < 0) throw UsageError("need 1 <= i <= r+1 and K >= 0");
  long n = K / (r + 1);
  int j = static_cast<int>(K % (r + 1));
  Rational base = (i == r + 1) ? Rational::one() : params(r, j)[i - 1];
  return base + Rational(n);
}

Rational param_hat(int r, int i, long k) {
  if (i < 1 || i > r + 1 || k < 0) throw UsageError("need 1 <= i <= r+1 and k >= 0");
  mpz_class c = ceil_div(mpz_class(k + 1 - i), mpz_class(r + 1));
  return Rational(i, r + 1) + Rational(c, mpz_class(1));
}

UniPoly<Rational> hypergeometric_poly(int r, int n, int j) {
  if (r < 1 || n < 0 || j < 0 || j > r) throw UsageError("need r >= 1, n >= 0, 0 <= j <= r");
  auto a = params(r, j);
  unsigned long deg_steps = static_cast<unsigned long>(r + 1) * n;
  Rational prefactor = pochhammer(Rational(j + 1), deg_steps) /
                       (Rational(mpz_class(factorial(n)), mpz_class(1)) *
                        Rational(r + 1).pow(static_cast<long>(deg_steps)));
  if (n % 2 == 1) prefactor = -prefactor;

  std::vector<Rational> coeffs(static_cast<size_t>(r + 1) * n + j + 1, Rational::zero());
  Rational term = Rational::one();  // (-n)_k / (prod (a_i)_k k!) built incrementally
  for (int k = 0; k <= n; ++k) {
    coeffs[static_cast<size_t>(r + 1) * k + j] = prefactor * term;
    if (k == n) break;
    Rational num = Rational(-n + k);
    Rational den = Rational(k + 1);
    for (const auto& ai : a) den *= ai + Rational(k);
    term *= num / den;
  }
  return UniPoly<Rational>(std::move(coeffs));
}

Rational explicit_coeff(int r, int n, int k, int j) {
  if (k < 0 || k > n || j < 0 || j > r) throw UsageError("need 0 <= k <= n and 0 <= j <= r");
  unsigned long steps = static_cast<unsigned long>(r + 1) * (n - k);
  Rational value = pochhammer(Rational(static_cast<long>(r + 1) * k + j + 1), steps) /
                   (Rational(r + 1).pow(static_cast<long>(steps)) *
                    Rational(mpz_class(factorial(n - k)), mpz_class(1)));
  if ((n - k) % 2 == 1) value = -value;
  return value;
}

VerifyResult verify(int r, int max_n, const Rational& scale_c) {
  if (r < 1 || max_n < 1) throw UsageError("need r >= 1 and max_n >= 1");
  if (scale_c.is_zero()) throw UsageError("need a nonzero scale");
  auto seq = mop::symmetric_sequence<Rational>(r, AlphaSpec::appell(r), max_n);
  VerifyResult res;

  for (int n = 0; n + 1 <= max_n; ++n) {
    UniPoly<Rational> lhs = differentiate(seq.polys[n + 1]);
    UniPoly<Rational> rhs = Rational(n + 1) * seq.polys[n];
    UniPoly<Rational> residual = lhs - rhs;
    if (!residual.is_zero()) {
      res.pass = false;
      res.first_fail_n = n;
      res.residual = residual.str();
      res.what = "derivative property";
      return res;
    }
  }

  // Scaled family: alpha = r! c^-(r+1) (r+1)^-r.
  Rational alpha_const = Rational(mpz_class(factorial(r)), mpz_class(1)) *
                         scale_c.pow(-(r + 1)) / Rational(r + 1).pow(r);
  std::vector<UniPoly<Rational>> Q;
  Q.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) Q.push_back(scale_family(seq.polys[n], n, scale_c));
  for (int n = 0; n + r + 1 <= max_n; ++n) {
    Rational coef = alpha_const * Rational(mpz_class(binomial(n + r, r)), mpz_class(1));
    UniPoly<Rational> rhs = Q[n + r].times_x_power(1) - coef * Q[n];
    UniPoly<Rational> residual = Q[n + r + 1] - rhs;
    if (!residual.is_zero()) {
      res.pass = false;
      res.first_fail_n = n;
      res.residual = residual.str();
      res.what = "scaled-family recurrence";
      return res;
    }
  }
  return res;
}

Moments moments(int r, int j, int n) {
  if (j < 1 || j > r || n < 0) throw UsageError("need 1 <= j <= r and n >= 0");
  Moments out;
  out.params = params(r, j - 1);
  out.moments.reserve(n + 1);
  for (int t = 0; t <= n; ++t) {
    Rational m = Rational::one();
    for (const auto& a : out.params) m *= pochhammer(a, t);
    out.moments.push_back(m);
  }
  return out;
}

}  // namespace appell
}  // namespace starhess
