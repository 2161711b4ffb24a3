#pragma once

#include <string>
#include <vector>

#include "starhess/rational.hpp"
#include "starhess/unipoly.hpp"

namespace starhess {
namespace appell {

/// alpha_k = (k+1)(k+2)...(k+r) / (r+1)^r; strictly positive.
Rational alpha(int r, long k);

/// Hypergeometric parameters a_1^[j], ..., a_r^[j] for 0 <= j <= r:
/// (i+j)/(r+1) when 1 <= i <= r-j, else (i+j+1)/(r+1).
std::vector<Rational> params(int r, int j);

/// Extended parameter a_i^[K] = a_i^[j] + n for K = (r+1)n + j, 1 <= i <= r+1
/// with a_{r+1}^[j] = 1.
Rational param_extended(int r, int i, long K);

/// The companion family a^_i^[k] = i/(r+1) + ceil((k+1-i)/(r+1)) for
/// 1 <= i <= r+1; as multisets {a_1^[j],...,a_r^[j], 1} = {a^_1^[j],...,a^_{r+1}^[j]}.
Rational param_hat(int r, int i, long k);

/// P_{(r+1)n+j} via the terminating hypergeometric series; monic of degree
/// (r+1)n + j.
UniPoly<Rational> hypergeometric_poly(int r, int n, int j);

/// c_{n,k}^[j] = (-1)^{n-k} ((r+1)k+j+1)_{(r+1)(n-k)} /
/// ((r+1)^{(r+1)(n-k)} (n-k)!), the coefficient of x^{(r+1)k+j}.
Rational explicit_coeff(int r, int n, int k, int j);

struct VerifyResult {
  bool pass = true;
  int first_fail_n = -1;
  std::string residual;
  std::string what;
};

/// Checks the derivative property P_{n+1}' = (n+1) P_n for n < max_n and the
/// scaled-family recurrence Q_{n+r+1} = x Q_{n+r} - alpha C(n+r, r) Q_n for
/// Q_n(x) = c^{-n} P_n(cx) with alpha = r! c^-(r+1) (r+1)^-r.
VerifyResult verify(int r, int max_n, const Rational& scale_c = Rational(2));

struct Moments {
  std::vector<Rational> params;   // a_1^[j-1], ..., a_r^[j-1]
  std::vector<Rational> moments;  // orders 0..n
};

/// Moment n of the j-th orthogonality measure on the positive half-line:
/// prod_i (a_i^[j-1])_n, normalised so that moment 0 equals 1, together with
/// the parameter list identifying its density.
Moments moments(int r, int j, int n);

}  // namespace appell
}  // namespace starhess
