#include <catch2/catch_amalgamated.hpp>

#include "hesslab/io.hpp"

using namespace hesslab;

TEST_CASE("decomposition table JSON schema") {
  json j = decompose_X(5, 2);
  CHECK(j["source"] == "X(2)");
  CHECK(j["N"] == 5);
  CHECK(j["total"] == "5");
  REQUIRE(j["summands"].size() == 1);
  CHECK(j["summands"][0]["family"] == "E");
  CHECK(j["summands"][0]["i"] == 2);
  CHECK(j["summands"][0]["j"] == 0);
  CHECK(j["summands"][0]["dim"] == "5");

  json jt = decompose_Xtilde_minus(5, 2);
  CHECK(jt["source"] == "XtildeMinus(2)");
  CHECK(jt["total"] == "16");
}

TEST_CASE("springer report JSON schema") {
  json j = consistency_suite(4);
  CHECK(j["n"] == 4);
  REQUIRE(j["checks"].size() == 7);
  bool saw_odd = false;
  for (const auto& c : j["checks"]) {
    REQUIRE(c.contains("name"));
    REQUIRE(c.contains("status"));
    REQUIRE(c.contains("lhs"));
    REQUIRE(c.contains("rhs"));
    CHECK(c["status"] == "pass");
    if (c["name"] == "odd_exhaustion") {
      saw_odd = true;
      CHECK(c["lhs"] == 4);
      CHECK(c["rhs"] == 4);
    }
  }
  CHECK(saw_odd);
  bool saw_conjectural = false;
  for (const auto& m : j["map"]) {
    REQUIRE(m.contains("source"));
    REQUIRE(m.contains("status"));
    if (m["status"] == "conjectural") {
      saw_conjectural = true;
      CHECK(m["orbit"].is_array());
      CHECK(m["system"].is_string());
    }
    if (m["status"] == "unknown") CHECK(m["orbit"].is_null());
  }
  CHECK(saw_conjectural);
}

TEST_CASE("poincare polynomial JSON carries exact coefficients") {
  json j = gaussian_binomial(4, 2);
  CHECK(j["coeffs"] == json({"1", "1", "2", "1", "1"}));
}
