#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "../support/random_poly.hpp"
#include "qsh/errors.hpp"
#include "qsh/gcd.hpp"
#include "qsh/laurent.hpp"
#include "qsh/parse.hpp"
#include "qsh/perm.hpp"

using namespace qsh;

namespace {

RatFunc E(const char* s) { return parse_expression(s); }
Poly P(const char* s) {
  RatFunc r = parse_expression(s);
  REQUIRE(r.is_poly());
  return r.num();
}

// Univariate Euclid over ℚ on dense coefficient lists; used to check that
// cofactors returned by gcd share no factor after random specialization.
using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = a;
    while (r.size() >= b.size() && !r.empty()) {
      Rational c = r.back() / b.back();
      std::size_t shift = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      trim(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Dense specialize(const Poly& p, const VarId& keep, const std::map<VarId, Rational>& values) {
  Dense out(p.degree_in(keep) + 1);
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    Rational c = p.coeff(t);
    unsigned e = 0;
    for (std::size_t k = 0; k < p.vars().size(); ++k) {
      auto ex = p.exponents(t)[k];
      if (p.vars()[k] == keep) {
        e = ex;
      } else {
        Rational v = values.at(p.vars()[k]);
        for (unsigned i = 0; i < ex; ++i) c *= v;
      }
    }
    out[e] += c;
  }
  return out;
}

void check_coprime_by_specialization(const Poly& a, const Poly& b, const std::vector<VarId>& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-40, 40);
  for (const auto& keep : vars) {
    if (a.degree_in(keep) == 0 || b.degree_in(keep) == 0) continue;
    std::map<VarId, Rational> values;
    for (const auto& v : vars) values[v] = val(rng);
    Dense g = dense_gcd(specialize(a, keep, values), specialize(b, keep, values));
    // A nontrivial common factor survives generic specialization; a spurious
    // one from an unlucky point is possible but vanishingly rare.
    CHECK(g.size() <= 1);
  }
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
  CHECK(E("(x+y) + (x-y)") == E("2*x"));
  CHECK(E("(x^2-y^2)/(x-y)") == E("x+y"));
  CHECK(E("1/(x-y) + 1/(y-x)").is_zero());
  CHECK_THROWS_AS(E("x") / RatFunc(), DivisionByZero);
}

TEST_CASE("canonical text round-trips") {
  std::mt19937_64 rng(7);
  std::vector<VarId> vars{VarId::lambda("1", 1), VarId::lambda("1", 2), VarId::lambda("2", 1), VarId::param("hbar")};
  for (int i = 0; i < 30; ++i) {
    RatFunc f = RatFunc::fraction(testing::random_poly(rng, vars, 4, 3), testing::random_poly(rng, vars, 3, 2) + Poly(7L));
    CHECK(parse_expression(f.str()) == f);
  }
  CHECK(E("2*x^2*y - 1/2*t1 + 3").str() == "2*x^2*y - 1/2*t1 + 3");
  CHECK(E("L1_1^2 + L1_1*L2_1").str() == "L1_1^2 + L1_1*L2_1");
}

TEST_CASE("variable order puts Chern roots first, vertices numerically") {
  CHECK(VarId::lambda("2", 1) < VarId::lambda("10", 1));
  CHECK(VarId::lambda("10", 1) < VarId::lambda("a", 1));
  CHECK(VarId::lambda("1", 2) < VarId::lambda("2", 1));
  CHECK(VarId::lambda("z", 9) < VarId::param("a"));
  CHECK(VarId::param("b") < VarId::param("hbar"));
}

TEST_CASE("canonical form survives (f+g)-g") {
  std::mt19937_64 rng(11);
  std::vector<VarId> vars{VarId::param("x"), VarId::param("y"), VarId::param("z")};
  for (int i = 0; i < 40; ++i) {
    RatFunc f = RatFunc::fraction(testing::random_poly(rng, vars, 4, 3), testing::random_poly(rng, vars, 3, 2) + Poly(3L));
    RatFunc g = RatFunc::fraction(testing::random_poly(rng, vars, 3, 2), testing::random_poly(rng, vars, 3, 2) + Poly(5L));
    CHECK((f + g) - g == f);
    if (!g.is_zero()) CHECK((f * g) / g == f);
    CHECK(f.den().leading_coefficient() == 1);
  }
}

TEST_CASE("gcd recovers planted common factors") {
  std::mt19937_64 rng(3);
  std::vector<VarId> vars{VarId::lambda("1", 1), VarId::lambda("1", 2), VarId::param("t1"), VarId::param("t2")};
  for (int i = 0; i < 60; ++i) {
    Poly a = testing::random_poly(rng, vars, 3, 3);
    Poly b = testing::random_poly(rng, vars, 3, 3);
    Poly c = testing::random_poly(rng, vars, 3, 2, 9);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Poly ac = a * c, bc = b * c;
    Poly g = gcd(ac, bc);
    CHECK(g.leading_coefficient() == 1);
    CHECK(g.divisible_by(c));
    auto ca = ac.divide_exact(g);
    auto cb = bc.divide_exact(g);
    REQUIRE(ca);
    REQUIRE(cb);
    check_coprime_by_specialization(*ca, *cb, vars, rng);
  }
}

TEST_CASE("gcd edge cases") {
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(P("2*x+2"), Poly()) == P("x+1"));
  CHECK(gcd(P("x^2*y"), P("x*y^3")) == P("x*y"));
  CHECK(gcd(P("x^2-1"), P("x^2+2*x+1")) == P("x+1"));
  CHECK(gcd(P("(x-y)*(x+t)"), P("(y-x)*(x-t)")) == P("x-y"));
  CHECK(gcd(P("3"), P("x")).is_one());
  // Large coefficients need several primes.
  Poly big = P("123456789012345678901234567890*x + 987654321098765432109876543210*y + 1");
  CHECK(gcd(big * P("x-3*y"), big * P("x+y^2")) == big.monic());
}

TEST_CASE("every canonical fraction is reduced") {
  std::mt19937_64 rng(5);
  std::vector<VarId> vars{VarId::param("x"), VarId::param("y")};
  for (int i = 0; i < 30; ++i) {
    Poly c = testing::random_poly(rng, vars, 2, 2) + Poly(1L);
    Poly den = testing::random_poly(rng, vars, 3, 2) * c + c;
    if (den.is_zero()) continue;
    RatFunc f = RatFunc::fraction(testing::random_poly(rng, vars, 3, 3) * c, den);
    CHECK(gcd(f.num(), f.den()).is_constant());
  }
}

TEST_CASE("permute_vars") {
  const std::string v = "1";
  auto swap12 = SlotPermutation::transposition(v, 2, 1, 2);
  CHECK(permute_vars(E("L1_1"), swap12) == E("L1_2"));
  CHECK(permute_vars(E("L1_1*L1_2"), swap12) == E("L1_1*L1_2"));
  CHECK(permute_vars(E("L1_1-L1_2"), swap12) == -E("L1_1-L1_2"));
  CHECK(permute_vars(E("t1*L2_3"), swap12) == E("t1*L2_3"));
  CHECK_THROWS_AS(permute_vars(E("L1_3"), swap12), BadPermutation);
  CHECK_THROWS_AS(SlotPermutation(SlotPermutation::Map{{"1", {1, 1}}}), BadPermutation);
  CHECK_THROWS_AS(permute_vars(E("L1_1"), swap12, DimVector{{"1", 3}}), BadPermutation);
}

TEST_CASE("symmetrize") {
  auto s2 = full_symmetric_group("1", 2);
  CHECK(symmetrize(E("L1_1"), s2) == E("L1_1+L1_2"));
  CHECK(symmetrize(E("1/(L1_2-L1_1)"), s2).is_zero());
  CHECK(symmetrize(E("(L1_1-L1_2+t1+t2)/(L1_2-L1_1)"), s2) == RatFunc(-2L));

  std::mt19937_64 rng(9);
  std::vector<VarId> vars{VarId::lambda("1", 1), VarId::lambda("1", 2), VarId::lambda("1", 3), VarId::param("t")};
  auto s3 = full_symmetric_group("1", 3);
  for (int i = 0; i < 10; ++i) {
    RatFunc f = RatFunc::fraction(testing::random_poly(rng, vars, 3, 3), testing::random_poly(rng, vars, 2, 1) + Poly(2L));
    CHECK(is_symmetric(symmetrize(f, s3), DimVector{{"1", 3}}));
  }
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(E("L1_1+L1_2"), DimVector{{"1", 2}}));
  CHECK_FALSE(is_symmetric(E("L1_1"), DimVector{{"1", 2}}));
  CHECK(is_symmetric(E("L1_1*L2_1"), DimVector{{"1", 1}, {"2", 1}}));
}

TEST_CASE("Laurent tails") {
  const VarId z = VarId::param("z");
  // 1/(z - a) = z^-1 + a z^-2 + a^2 z^-3 + ...
  auto s = LaurentTail::expand_at_infinity(E("1/(z-a)"), z, 5);
  CHECK(s[0].is_zero());
  CHECK(s[1] == E("1"));
  CHECK(s[4] == E("a^3"));
  auto t = LaurentTail::expand_at_infinity(E("(z-x+h)/(z-x-h)"), z, 4);
  CHECK(t[0] == E("1"));
  CHECK(t[1] == E("2*h"));
  CHECK(t[2] == E("2*h*(x+h)"));
  CHECK((t * t.inverse()) == LaurentTail::constant(RatFunc(1L), 4));
  CHECK_THROWS_AS(LaurentTail::expand_at_infinity(E("z^2/(z-1)"), z, 3), InvalidInput);
  CHECK_THROWS_AS(s.inverse(), DivisionByZero);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(E("x +"), ParseError);
  CHECK_THROWS_AS(E("(x"), ParseError);
  CHECK_THROWS_AS(E("x $ y"), ParseError);
  CHECK_THROWS_AS(E("1/0"), ParseError);
  CHECK(E("x^-2") == E("1/x^2"));
  CHECK(E("-x^2") == -E("x^2"));
}
