#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qsh/errors.hpp"
#include "qsh/quiver.hpp"

using namespace qsh;

TEST_CASE("matrices by direct count") {
  const auto J = Quiver::preset("Jordan").matrices();
  CHECK(J.ad == IntMatrix{{1}});
  CHECK(J.c == IntMatrix{{0}});
  CHECK(J.c_bar == IntMatrix{{0}});
  CHECK(J.cartan == IntMatrix{{0}});

  const auto A2 = Quiver::preset("A2").matrices();
  CHECK(A2.ad == IntMatrix{{0, 0}, {1, 0}});
  CHECK(A2.ad_bar == IntMatrix{{0, 1}, {0, 0}});
  CHECK(A2.cartan == IntMatrix{{2, -1}, {-1, 2}});

  const Quiver free({"1", "2", "3"}, {});
  const auto M = free.matrices();
  CHECK(M.c == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(M.cartan == IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});

  const auto K = Quiver::preset("Kronecker").matrices();
  CHECK(K.cartan == IntMatrix{{2, -2}, {-2, 2}});
  CHECK(Quiver::preset("Kronecker3").cartan_entry("1", "2") == -3);
  CHECK(Quiver::preset("A3").cartan_entry("1", "3") == 0);
  CHECK(Quiver::preset("A3").cartan_entry("2", "3") == -1);
}

TEST_CASE("cartan matrix is symmetric and c = I - ad") {
  const Quiver Q({"1", "2", "3"}, {{"1", "2"}, {"2", "1"}, {"2", "3"}, {"3", "3"}, {"1", "3"}, {"1", "3"}});
  const auto M = Q.matrices();
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) {
      CHECK(M.cartan[k][l] == M.cartan[l][k]);
      CHECK(M.c[k][l] == (k == l ? 1 : 0) - M.ad[k][l]);
      CHECK(M.cartan[k][l] == (k == l ? 2 : 0) - M.ad[k][l] - M.ad[l][k]);
    }
  CHECK(Q.has_loop_at("3"));
  CHECK_FALSE(Q.has_loop_at("1"));
  CHECK(Q.arrow_count("1", "3") == 2);
}

TEST_CASE("invalid quivers") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), InvalidInput);
  CHECK_THROWS_AS(Quiver({"1"}, {{"1", "2"}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::preset("E8"), InvalidInput);
}

TEST_CASE("shuffle counts") {
  CHECK(shuffles({{"1", 1}}, {{"1", 1}}).size() == 2);
  CHECK(shuffles({{"1", 1}, {"2", 1}}, {{"1", 1}}).size() == 2);
  const auto id = shuffles({}, {{"1", 2}, {"2", 1}});
  REQUIRE(id.size() == 1);
  CHECK(id[0].is_identity());
  CHECK(shuffles({{"1", 2}, {"2", 1}}, {{"1", 2}, {"2", 2}}).size() == 6 * 3);
  CHECK(block_shuffles("1", {1, 1, 1}).size() == 6);
  CHECK(block_shuffles("1", {2, 1, 2}).size() == 30);

  // Every (2,3)-shuffle is increasing on both blocks and they are all distinct.
  const auto sh = shuffles({{"1", 2}}, {{"1", 3}});
  CHECK(sh.size() == 10);
  std::set<std::vector<int>> seen;
  for (const auto& s : sh) {
    const auto& img = s.images().at("1");
    CHECK(img[0] < img[1]);
    CHECK(img[2] < img[3]);
    CHECK(img[3] < img[4]);
    seen.insert(img);
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("case-2 weights") {
  const auto one = Quiver::preset("A2").case2_weights();
  CHECK(one.arrows()[0].m_h == 1);
  CHECK(one.arrows()[0].m_hstar == 1);
  const auto two = Quiver::preset("Kronecker").case2_weights();
  CHECK(two.arrows()[0].m_h == 2);
  CHECK(two.arrows()[0].m_hstar == 0);
  CHECK(two.arrows()[1].m_h == 0);
  CHECK(two.arrows()[1].m_hstar == 2);
  const auto three = Quiver::preset("Kronecker3").case2_weights();
  for (const auto& h : three.arrows()) CHECK(h.m_h + h.m_hstar == 2);
  CHECK(three.satisfies_case2_assumption());
  CHECK(Quiver::preset("A3").all_unit_weights());
  const Quiver bad({"1", "2"}, {{"1", "2", 1, 1}, {"1", "2", 3, 0}});
  CHECK_FALSE(bad.satisfies_case2_assumption());
}

TEST_CASE("twist signs") {
  const DimVector e{{"1", 1}};
  CHECK(Quiver::preset("A1").twist_sign(e, e) == 1);
  CHECK(Quiver::preset("Jordan").twist_sign(e, e) == -1);
  CHECK(Quiver::preset("A1").twist_sign({}, e) == -1);
  CHECK(Quiver::preset("A2").twist_sign({}, {}) == -1);
  // <v2, C̄ v1> = v2·v1 - Σ_h v2(out h) v1(inc h); the A2 arrow is 1 → 2.
  const auto A2 = Quiver::preset("A2");
  CHECK(A2.twist_sign({{"1", 1}}, {{"2", 1}}) == -1);
  CHECK(A2.twist_sign({{"2", 1}}, {{"1", 1}}) == 1);
}
