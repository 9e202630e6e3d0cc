#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/printers.hpp"
#include "qsh/errors.hpp"
#include "qsh/parse.hpp"
#include "qsh/serre.hpp"
#include "qsh/shuffle.hpp"

using namespace qsh;

namespace {

const RatFunc b = RatFunc::variable(b_var());
const RatFunc hbar = RatFunc::variable(hbar_var());

}  // namespace

TEST_CASE("small values") {
  CHECK(s_direct(1, b, hbar) == parse_expression("2*hbar*b"));
  CHECK(s_recursive(1, b, hbar) == parse_expression("2*hbar*b"));
  CHECK(s_direct(2, b, hbar) == parse_expression("-8*hbar^2*b*(b-1/2)"));
  CHECK(s_recursive(2, b, hbar) == parse_expression("-8*hbar^2*b*(b-1/2)"));
  CHECK(s_direct(3, RatFunc(1L), hbar).is_zero());
}

TEST_CASE("direct sum matches the recursion and is free of Chern roots") {
  for (int n = 1; n <= 4; ++n) {
    const RatFunc d = s_direct(n, b, hbar);
    CHECK(lambda_free(d));
    CHECK(d.is_poly());
    CHECK(d == s_recursive(n, b, hbar));
    CHECK(s_recursive(n, RatFunc(ratio(n - 1, 2)), hbar).is_zero());
    CHECK(s_direct(n, RatFunc(ratio(n - 1, 2)), hbar).is_zero());
  }
}

TEST_CASE("residue identities") {
  CHECK(residue_identity_difference(1, true, b, hbar).is_zero());
  for (int n = 1; n <= 4; ++n) {
    CHECK(residue_identity_difference(n, true, b, hbar).is_zero());
    CHECK(residue_identity_difference(n, false, b, hbar).is_zero());
  }
  // n = 2 written out by hand.
  const RatFunc lhs = parse_expression("(L1_1+b*hbar)*(L1_2-L1_1+hbar)/(L1_1-L1_2) + (L1_2+b*hbar)*(L1_1-L1_2+hbar)/(L1_2-L1_1)");
  CHECK(lhs == parse_expression("-(2*b*hbar + L1_1 + L1_2 - hbar)"));
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(s_direct(7, b, hbar), LimitExceeded);
  CHECK_THROWS_AS(residue_identity_difference(7, true, b, hbar), LimitExceeded);
  CHECK_THROWS_AS(s_direct(0, b, hbar), InvalidInput);
  CHECK_NOTHROW(s_recursive(20, b, hbar));
}
