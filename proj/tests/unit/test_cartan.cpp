#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/printers.hpp"
#include "qsh/cartan.hpp"
#include "qsh/errors.hpp"
#include "qsh/parse.hpp"
#include "qsh/shuffle.hpp"

using namespace qsh;

namespace {

const RatFunc hbar = RatFunc::variable(hbar_var());

// (z - a)/(z - b) = 1 + (b - a) Σ_{r ≥ 0} b^r z^{-r-1}.
std::vector<RatFunc> geometric_ratio(const RatFunc& a, const RatFunc& b, int order) {
  std::vector<RatFunc> c{RatFunc(1L)};
  for (int r = 0; r + 1 < order; ++r) c.push_back((b - a) * b.pow(r));
  return c;
}

std::vector<DimVector> dims_up_to(const Quiver& Q, int total) {
  std::vector<DimVector> out{DimVector()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& v : Q.vertices()) {
      DimVector d = out[i] + DimVector::unit(v);
      if (d.total() > total) continue;
      bool seen = false;
      for (const auto& o : out) seen = seen || o == d;
      if (!seen) out.push_back(d);
    }
  return out;
}

}  // namespace

TEST_CASE("constant series for v = 0") {
  for (auto c : {WeightCase::Case1, WeightCase::Case2}) {
    const auto s = phi_hat(FormalGroupLaw::additive(), Quiver::preset("A2"), "1", {}, c, 4);
    CHECK(s.tail == LaurentTail::constant(RatFunc(1L), 4));
  }
}

TEST_CASE("case-2 generator series by geometric expansion") {
  const auto A = FormalGroupLaw::additive();
  const auto A2 = Quiver::preset("A2");
  const RatFunc lam = RatFunc::lambda("2", 1), lam1 = RatFunc::lambda("1", 1);
  const RatFunc half = hbar / RatFunc(2L);
  // c_12 = -1: (z - λ - ħ/2)/(z - λ + ħ/2).
  CHECK(phi_hat(A, A2, "1", {{"2", 1}}, WeightCase::Case2, 6).tail ==
        LaurentTail(geometric_ratio(lam + half, lam - half, 6)));
  // c_11 = 2: (z - λ + ħ)/(z - λ - ħ) = 1 + 2ħ z^-1 + ...
  const auto self = phi_hat(A, A2, "1", {{"1", 1}}, WeightCase::Case2, 6).tail;
  CHECK(self == LaurentTail(geometric_ratio(lam1 - hbar, lam1 + hbar, 6)));
  CHECK(self[1] == RatFunc(2L) * hbar);
}

TEST_CASE("case-1 series on the Jordan quiver") {
  // Only the same-vertex factor survives for a single vertex even with a loop.
  const auto s = phi_hat(FormalGroupLaw::additive(), Quiver::preset("Jordan"), "1", {{"1", 1}}, WeightCase::Case1, 5);
  const RatFunc t = parse_expression("t1+t2"), lam = RatFunc::lambda("1", 1);
  CHECK(s.tail == LaurentTail(geometric_ratio(lam - t, lam + t, 5)));
}

TEST_CASE("multiplicativity") {
  const FormalGroupLaw laws[] = {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative(RatFunc(1L))};
  for (const char* name : {"A1", "A2", "Jordan"}) {
    const Quiver Q = Quiver::preset(name);
    const auto dims = dims_up_to(Q, 2);
    for (const auto& F : laws)
      for (auto c : {WeightCase::Case1, WeightCase::Case2}) {
        if (c == WeightCase::Case2 && Q.has_loops()) continue;
        for (const auto& k : Q.vertices())
          for (const auto& v1 : dims)
            for (const auto& v2 : dims)
              if (v1.total() + v2.total() <= 3) CHECK(phi_hat_multiplicativity_check(F, Q, k, v1, v2, c, 4));
      }
  }
  CHECK(phi_hat_multiplicativity_check(FormalGroupLaw::additive(), Quiver::preset("A2"), "1", {{"1", 1}}, {{"1", 1}},
                                       WeightCase::Case2, 4));
}

TEST_CASE("commutator with generators") {
  const auto A2 = Quiver::preset("A2"), A3 = Quiver::preset("A3");
  CHECK(cartan_commutator_leading(A2, "1", "1", 0, 3).is_zero());
  CHECK(cartan_commutator_leading(A2, "1", "2", 1, 3).is_zero());
  CHECK(cartan_commutator_leading(A3, "1", "3", 2, 3).is_zero());
  for (const auto& k : A3.vertices())
    for (const auto& j : A3.vertices())
      for (int s = 0; s <= 3; ++s) CHECK(cartan_commutator_leading(A3, k, j, s, 3).is_zero());
  const Quiver split({"1", "2"}, {});
  CHECK(phi_hat(FormalGroupLaw::additive(), split, "1", {{"2", 2}}, WeightCase::Case2, 4).tail ==
        LaurentTail::constant(RatFunc(1L), 4));
}

TEST_CASE("rejections") {
  const auto J = Quiver::preset("Jordan");
  CHECK_THROWS_AS(phi_hat(FormalGroupLaw::additive(), J, "1", {{"1", 1}}, WeightCase::Case2, 3), EdgeLoopRejected);
  CHECK_THROWS_AS(cartan_commutator_leading(J, "1", "1", 0, 3), EdgeLoopRejected);
  CHECK_THROWS_AS(
      phi_hat(FormalGroupLaw::truncated({}, 4), Quiver::preset("A1"), "1", {{"1", 1}}, WeightCase::Case1, 3),
      NotTruncatable);
  CHECK_THROWS_AS(phi_hat(FormalGroupLaw::additive(), J, "7", {}, WeightCase::Case1, 3), InvalidInput);
}
