#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "starhess/multipoly.hpp"
#include "starhess/rational.hpp"
#include "starhess/serialize.hpp"
#include "starhess/unipoly.hpp"

using namespace starhess;

namespace {

// Deterministic small-polynomial generator for the ring axiom checks.
MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), index(0, 5), expo(1, 2), coef(-4, 4);
  MultiPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    MultiPoly term = MultiPoly::constant(coef(rng));
    int vars = nterms(rng) % 3;
    for (int v = 0; v < vars; ++v) {
      MultiPoly var = MultiPoly::indeterminate(index(rng));
      for (int e = expo(rng); e > 0; --e) term = term * var;
    }
    p += term;
  }
  return p;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(Rational(1, 3), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 3), 2) == Rational(4, 9));
  CHECK(pochhammer(Rational(2), 3) == Rational(24));
}

TEST_CASE("pochhammer addition rule") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Rational c = random_rational(rng);
    unsigned long m = rng() % 21, n = rng() % 21;
    CHECK(pochhammer(c, m + n) == pochhammer(c, m) * pochhammer(c + Rational(m), n));
  }
}

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-8, 6).str() == "-4/3");
  CHECK(Rational::parse("2/9") == Rational(2, 9));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1.5"), UsageError);
  CHECK_THROWS_AS(Rational::parse("a"), UsageError);
  CHECK_THROWS_AS(Rational::parse("1/0"), UsageError);
  CHECK(Rational(5, 3).pow(-2) == Rational(9, 25));
}

TEST_CASE("substitution examples") {
  MultiPoly p = MultiPoly::indeterminate(0) + MultiPoly::indeterminate(1);
  std::map<int, Rational> assign{{0, Rational(2, 9)}, {1, Rational(2, 3)}};
  CHECK(p.substitute(assign) == Rational(8, 9));

  CHECK(MultiPoly::zero().substitute({}) == Rational(0));

  MultiPoly q = MultiPoly::indeterminate(0) * MultiPoly::indeterminate(2) +
                MultiPoly::indeterminate(0) * MultiPoly::indeterminate(1);
  std::map<int, Rational> assign2{
      {0, Rational(2, 9)}, {1, Rational(2, 3)}, {2, Rational(4, 3)}};
  CHECK(q.substitute(assign2) == Rational(4, 9));

  CHECK_THROWS_AS(q.substitute(assign), MissingAssignment);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(11);
  std::map<int, Rational> assign;
  for (int i = 0; i <= 5; ++i) assign[i] = random_rational(rng);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly p = random_poly(rng), q = random_poly(rng);
    CHECK((p * q).substitute(assign) == p.substitute(assign) * q.substitute(assign));
    CHECK((p + q).substitute(assign) == p.substitute(assign) + q.substitute(assign));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly p = random_poly(rng), q = random_poly(rng), s = random_poly(rng);
    CHECK((p + q) + s == p + (q + s));
    CHECK(p * q == q * p);
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p + MultiPoly::zero() == p);
    CHECK(p * MultiPoly::one() == p);
    CHECK(p - p == MultiPoly::zero());
  }
}

TEST_CASE("canonical form is stable under rebuilding") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p = random_poly(rng);
    // Rebuild from the canonical term list; must reproduce the same object.
    MultiPoly rebuilt;
    for (const auto& [e, c] : p.terms()) rebuilt += MultiPoly::from_term(e, c);
    CHECK(rebuilt == p);
    for (const auto& [e, c] : p.terms()) CHECK(c != 0);
  }
}

TEST_CASE("unipoly differentiate") {
  using P = UniPoly<Rational>;
  P p(std::vector<Rational>{Rational(-2, 9), Rational(0), Rational(0), Rational(1)});
  CHECK(differentiate(p) == P(std::vector<Rational>{Rational(0), Rational(0), Rational(3)}));
  CHECK(differentiate(P(std::vector<Rational>{Rational(5)})) == P::zero());
  P q(std::vector<Rational>{Rational(0), Rational(-8, 9), Rational(0), Rational(0), Rational(1)});
  CHECK(differentiate(q) ==
        P(std::vector<Rational>{Rational(-8, 9), Rational(0), Rational(0), Rational(4)}));
}

TEST_CASE("unipoly over the symbolic ring") {
  using P = UniPoly<MultiPoly>;
  P x = P::x();
  P p = x * x - P::monomial(MultiPoly::indeterminate(0), 0);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == -MultiPoly::indeterminate(0));
  CHECK(differentiate(p) == MultiPoly::from_int(2) * x);
}

TEST_CASE("json round trips for ring values") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    MultiPoly p = random_poly(rng);
    nlohmann::json jp = p;
    CHECK(jp.get<MultiPoly>() == p);

    Rational r = random_rational(rng);
    nlohmann::json jr = r;
    CHECK(jr.get<Rational>() == r);
  }
  UniPoly<Rational> u(std::vector<Rational>{Rational(1, 2), Rational(0), Rational(3)});
  nlohmann::json ju = u;
  CHECK(ju.get<UniPoly<Rational>>() == u);
  CHECK(ju.dump() == R"({"coeffs":["1/2","0","3"]})");
}
