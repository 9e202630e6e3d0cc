#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsh/errors.hpp"
#include "qsh/fgl.hpp"
#include "qsh/parse.hpp"
#include "../support/random_poly.hpp"

using namespace qsh;

namespace {

RatFunc E(const char* s) { return parse_expression(s); }

FormalGroupLaw mult1() { return FormalGroupLaw::multiplicative(RatFunc(1L)); }

// F(x, y) = x + y + xy(x + y) truncated at 4 is not associative; this one is
// the expansion of the multiplicative law with β = 1 written as a series.
FormalGroupLaw mult_as_truncated(int order) { return FormalGroupLaw::truncated({{{1, 1}, Rational(-1)}}, order); }

}  // namespace

TEST_CASE("additive and multiplicative sums") {
  CHECK(FormalGroupLaw::additive().sum(E("x"), E("y")) == E("x+y"));
  CHECK(mult1().sum(E("x"), E("y")) == E("x+y-x*y"));
  CHECK(FormalGroupLaw::additive().sum(E("x"), RatFunc()) == E("x"));
  const auto Fb = FormalGroupLaw::multiplicative(E("beta"));
  CHECK(Fb.sum(E("x"), E("y")) == E("x+y-beta*x*y"));
}

TEST_CASE("inverses") {
  CHECK(FormalGroupLaw::additive().inverse(E("x")) == E("-x"));
  CHECK(FormalGroupLaw::additive().inverse(RatFunc()) == RatFunc());
  const RatFunc w = mult1().inverse(E("v"));
  CHECK(w == E("-v/(1-v)"));
  CHECK(E("v") + w - E("v") * w == RatFunc());
  const auto Fb = FormalGroupLaw::multiplicative(E("beta"));
  CHECK(Fb.sum(E("x"), Fb.inverse(E("x"))).is_zero());
}

TEST_CASE("multiples") {
  CHECK(FormalGroupLaw::additive().multiple(3, E("t")) == E("3*t"));
  CHECK(mult1().multiple(2, E("t")) == E("2*t-t^2"));
  CHECK(mult1().multiple(0, E("t")).is_zero());
  CHECK(FormalGroupLaw::additive().multiple(0, E("t")).is_zero());
  CHECK(mult1().multiple(-1, E("t")) == mult1().inverse(E("t")));
  // 1 - (1 - t)^m for the multiplicative law with β = 1.
  for (int m = 1; m <= 5; ++m) CHECK(mult1().multiple(m, E("t")) == RatFunc(1L) - (RatFunc(1L) - E("t")).pow(m));
  CHECK(mult1().sum(mult1().multiple(3, E("t")), mult1().multiple(-3, E("t"))).is_zero());
}

TEST_CASE("differences and unit factors") {
  const auto A = FormalGroupLaw::additive();
  CHECK(A.difference(E("u"), E("v")) == E("u-v"));
  auto [lin, g] = A.unit_factor(E("u"), E("v"));
  CHECK(lin == E("u-v"));
  CHECK(g == RatFunc(1L));
  CHECK(mult1().difference(E("u"), E("v")) == E("(u-v)/(1-v)"));
  auto [lin2, g2] = mult1().unit_factor(E("u"), E("v"));
  CHECK(lin2 == E("u-v"));
  CHECK(g2 == E("1/(1-v)"));
  CHECK(A.difference(E("u"), E("u")).is_zero());
  CHECK(mult1().difference(E("u"), E("u")).is_zero());
}

TEST_CASE("truncated laws") {
  const auto T = mult_as_truncated(5);
  CHECK(T.sum(E("x"), E("y")) == E("x+y-x*y"));
  // F(x, y) for the multiplicative law is already polynomial; sums of
  // polynomials are cut at degree 5.
  CHECK(T.sum(E("x^2"), E("x^3")) == E("x^2+x^3"));
  CHECK(T.sum(E("x^2"), E("x^2")) == E("2*x^2-x^4"));
  CHECK(T.sum(E("x^3"), E("x^3")) == E("2*x^3"));
  CHECK_THROWS_AS(T.sum(E("1+x"), E("y")), NotTruncatable);
  CHECK_THROWS_AS(T.sum(E("1/(1-x)"), E("y")), NotTruncatable);
  // ι(x) = -x - x^2 - ... mod degree 5.
  CHECK(T.inverse(E("x")) == E("-x-x^2-x^3-x^4"));
  CHECK(T.sum(E("x"), T.inverse(E("x"))).is_zero());
  // x -_F y = (x - y)·u(x, y) modulo degree 5.
  auto [lin, u] = T.unit_factor(E("x"), E("y"));
  CHECK(lin == E("x-y"));
  CHECK(RatFunc(T.truncate((lin * u).num())) == T.difference(E("x"), E("y")));
  CHECK_THROWS_AS(FormalGroupLaw::truncated({{{1, 2}, Rational(1)}}, 5), InvalidInput);
  CHECK_THROWS_AS(FormalGroupLaw::truncated({{{1, 1}, Rational(1)}, {{1, 2}, Rational(1)}, {{2, 1}, Rational(1)}}, 5),
                  InvalidInput);
}

TEST_CASE("law axioms on random inputs") {
  std::mt19937_64 rng(7);
  const std::vector<VarId> vars{VarId::param("x"), VarId::param("y"), VarId::param("z")};
  const auto Fb = FormalGroupLaw::multiplicative(E("beta"));
  for (int trial = 0; trial < 20; ++trial) {
    const RatFunc a = testing::random_poly(rng, vars, 3, 2), b = testing::random_poly(rng, vars, 3, 2),
                  c = testing::random_poly(rng, vars, 3, 2);
    for (const auto& F : {FormalGroupLaw::additive(), mult1(), Fb}) {
      CHECK(F.sum(a, b) == F.sum(b, a));
      CHECK(F.sum(F.sum(a, b), c) == F.sum(a, F.sum(b, c)));
      CHECK(F.sum(a, RatFunc()) == a);
    }
  }
  // Truncated: associativity modulo the order, on inputs without constant term.
  const auto T = mult_as_truncated(6);
  for (int trial = 0; trial < 10; ++trial) {
    auto nil = [&] {
      Poly p = testing::random_poly(rng, vars, 3, 2);
      return RatFunc(p - Poly(p.constant_term()));
    };
    const RatFunc a = nil(), b = nil(), c = nil();
    CHECK(T.sum(T.sum(a, b), c) == T.sum(a, T.sum(b, c)));
    CHECK(T.sum(a, b) == T.sum(b, a));
  }
}
