#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/printers.hpp"
#include "qsh/errors.hpp"
#include "qsh/jobs.hpp"
#include "qsh/parse.hpp"

using namespace qsh;
using jobs::json;

TEST_CASE("product example") {
  const auto r = jobs::run(json{{"command", "product"}, {"quiver", "A1"}, {"fgl", "additive"}, {"a", "1@e"}, {"b", "1@e"}});
  CHECK(r.exit_code == 0);
  CHECK(r.output.dump() == R"({"dim":{"1":2},"num":"-2","den":"1"})");
}

TEST_CASE("serre table and quadratic check examples") {
  const auto t = jobs::run(json{{"command", "serre-table"}, {"n_max", 3}});
  CHECK(t.exit_code == 0);
  REQUIRE(t.output["rows"].size() == 3);
  CHECK(parse_expression(t.output["rows"][0]["direct"].get<std::string>()) == parse_expression("2*hbar*b"));
  const auto q = jobs::run(json{{"command", "check-quadratic"}, {"quiver", "A2"}, {"k", 1}, {"l", 2}});
  CHECK(q.exit_code == 0);
  CHECK(q.output == json{{"verified", true}});
}

TEST_CASE("dimension vectors") {
  const Quiver a3 = Quiver::preset("A3");
  CHECK(jobs::parse_dim("2e1+e3", a3) == DimVector{{"1", 2}, {"3", 1}});
  CHECK(jobs::parse_dim("1:2,3:1", a3) == DimVector{{"1", 2}, {"3", 1}});
  CHECK(jobs::parse_dim("0", a3) == DimVector());
  CHECK(jobs::parse_dim("e", Quiver::preset("Jordan")) == DimVector{{"1", 1}});
  CHECK_THROWS_AS(jobs::parse_dim("e", a3), InvalidInput);
  CHECK_THROWS_AS(jobs::parse_dim("e7", a3), InvalidInput);
  CHECK_THROWS_AS(jobs::parse_dim("2x1", a3), InvalidInput);
  CHECK_THROWS_AS(jobs::parse_dim("", a3), InvalidInput);
}

TEST_CASE("element round trip") {
  const Quiver q = Quiver::preset("A2");
  const std::vector<ShuffleElement> samples{
      {{{"1", 2}}, parse_expression("(L1_1*L1_2 - hbar)/(1 - beta*L1_1)")},
      {{{"1", 1}, {"2", 1}}, parse_expression("-L1_1 + L2_1 + 1/2*hbar")},
      {{}, parse_expression("3/7")},
  };
  for (const auto& e : samples) {
    const json j = jobs::element_json(e);
    CHECK(jobs::parse_element(j, q) == e);
    CHECK(jobs::parse_element(json::parse(j.dump()), q) == e);
  }
  // Products emitted by the runner parse back to the computed element.
  const auto r = jobs::run(json{{"command", "twisted-product"}, {"quiver", "A2"}, {"specialization", "case2"},
                                {"a", "L1_1^2@e1"}, {"b", "L2_1@e2"}});
  const auto s = ShuffleSetup::case2(FormalGroupLaw::additive(), q);
  CHECK(jobs::parse_element(r.output, q) ==
        twisted_product(s, jobs::parse_element(json("L1_1^2@e1"), q), jobs::parse_element(json("L2_1@e2"), q)));
}

TEST_CASE("quivers and laws from JSON") {
  const json q = json::parse(R"({"vertices":["1","2"],"arrows":[{"out":"1","inc":"2","m_h":2,"m_hstar":0}]})");
  const Quiver Q = jobs::parse_quiver(q);
  CHECK(Q.arrows()[0].m_h == 2);
  CHECK(jobs::parse_quiver(json("Kronecker")).arrow_count("1", "2") == 2);
  CHECK_THROWS_AS(jobs::parse_quiver(json::parse(R"({"vertices":["1"],"extra":1})")), InvalidInput);
  CHECK(jobs::parse_fgl(json::parse(R"({"kind":"multiplicative","beta":"1"})")).kind() ==
        FormalGroupLaw::Kind::Multiplicative);
  const auto T = jobs::parse_fgl(json::parse(R"({"kind":"truncated","order":5,"coeffs":[[1,1,"-1"]]})"));
  CHECK(T.order() == 5);
  CHECK_THROWS_AS(jobs::parse_fgl(json::parse(R"({"kind":"truncated","order":5,"coeffs":[[1,2,"1"]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(jobs::parse_fgl(json::parse(R"({"kind":"additive","beta":"1"})")), InvalidInput);
}

TEST_CASE("exit codes") {
  CHECK(jobs::run_text("{not json").exit_code == jobs::Malformed);
  CHECK(jobs::run(json{{"command", "product"}, {"bogus", 1}}).exit_code == jobs::Malformed);
  CHECK(jobs::run(json{{"command", "nope"}}).exit_code == jobs::Malformed);
  CHECK(jobs::run(json{{"command", "product"}, {"a", "1@e"}}).exit_code == jobs::Malformed);
  CHECK(jobs::run(json{{"command", "serre-table"}, {"n_max", 9}}).exit_code == jobs::Limit);
  CHECK(jobs::run(json{{"command", "check-serre"}, {"quiver", "Jordan"}, {"k", 1}, {"l", 1}}).exit_code ==
        jobs::Malformed);
  // t1 = t2 = ħ breaks the relation written with ħ/2: a verification failure with a witness.
  const auto bad = jobs::run(json{{"command", "check-quadratic"}, {"quiver", "A1"}, {"k", 1}, {"l", 1}, {"hbar", "full"}});
  CHECK(bad.exit_code == jobs::VerificationFailed);
  CHECK(bad.output.contains("witness"));

  const auto batch = jobs::run(json::array({json{{"command", "serre-table"}, {"n_max", 2}},
                                            json{{"command", "serre-table"}, {"n_max", 9}},
                                            json{{"command", "product"}, {"extra", 0}}}));
  CHECK(batch.exit_code == jobs::Limit);
  CHECK(batch.output.size() == 3);
  CHECK(batch.output[0].contains("rows"));
}

TEST_CASE("substitutions and ids") {
  const auto r = jobs::run(json{{"command", "product"},
                                {"id", "x"},
                                {"quiver", "A2"},
                                {"a", "1@e1"},
                                {"b", "1@e2"},
                                {"substitute", json::array({"t1=hbar/2", "t2=hbar/2"})}});
  CHECK(r.output["id"] == "x");
  CHECK(parse_expression(r.output["num"].get<std::string>()) == parse_expression("L2_1 - L1_1 + hbar/2"));
  const auto o = jobs::run(json{{"command", "pushforward"},
                                {"kind", "grass"},
                                {"f", "L1_1*s"},
                                {"r", 1},
                                {"n", 2},
                                {"substitute", json{{"s", "3"}}}});
  CHECK(o.output["value"]["num"] == "-3");
  CHECK(jobs::run(json{{"command", "product"}, {"a", "1@e"}, {"b", "1@e"}, {"substitute", json{{"L1_1", "0"}}}})
            .exit_code == jobs::Malformed);
}

TEST_CASE("other commands") {
  const auto p = jobs::run(json{{"command", "phi-hat"}, {"quiver", "A2"}, {"k", 1}, {"v", "e1"}, {"order", 2}});
  CHECK(p.output["coefficients"][1]["num"] == "2*hbar");
  const auto f = jobs::run(json{{"command", "fo-check"}});
  CHECK(f.exit_code == 0);
  const auto c = jobs::run(json{{"command", "coha-product"}, {"quiver", "Jordan"}, {"a", "1@e"}, {"b", "1@e"}});
  CHECK(c.output["num"] == "2");
  const auto flag = jobs::run(json{{"command", "pushforward"}, {"kind", "flag"}, {"f", "L1_1^2*L1_2"}, {"blocks", {1, 1, 1}}});
  CHECK(flag.exit_code == 0);
  const auto sp = jobs::run(json{{"command", "spherical-table"}, {"max_dim", "2e"}, {"max_deg", 0}});
  CHECK(sp.output["entries"].size() == 2);
  CHECK(jobs::run(json{{"command", "spherical-table"}, {"max_dim", "6e"}, {"max_deg", 3}, {"max_words", 10}})
            .exit_code == jobs::Limit);
}
