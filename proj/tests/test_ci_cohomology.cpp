#include <catch2/catch_amalgamated.hpp>

#include "hesslab/ci_cohomology.hpp"
#include "hesslab/poincare.hpp"

using namespace hesslab;

TEST_CASE("ci_euler frozen values") {
  CHECK(ci_euler(CIProfile(3, {2})) == 4);
  CHECK(ci_euler(CIProfile(4, {2, 2})) == 8);
  CHECK(ci_euler(CIProfile(5, {2, 2, 2})) == 24);
  CHECK(ci_euler(CIProfile(6, {2, 2, 2})) == -24);
  CHECK(ci_euler(CIProfile(5, {2, 2, 2, 2, 2})) == 32);  // Bezout point count
}

TEST_CASE("primitive middle Betti numbers") {
  CHECK(primitive_middle_betti(CIProfile(4, {2, 2})) == 5);
  CHECK(primitive_middle_betti(CIProfile(6, {2, 2, 2})) == 28);
  CHECK(primitive_middle_betti(CIProfile(5, {2, 2, 2, 2, 2})) == 31);
  CHECK(primitive_middle_betti(CIProfile(5, {2, 2, 2})) == 21);  // K3 primitive b2
  CHECK(primitive_middle_betti(CIProfile(4, {2})) == 0);         // quadric threefold
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(CIProfile(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(CIProfile(3, {2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CIProfile(1, {2, 2}), std::invalid_argument);
}

TEST_CASE("quadric Euler characteristics cross-check quadric_count at q = 1") {
  for (int D = 0; D <= 8; ++D) {
    Int chi = ci_euler(CIProfile(D + 1, {2}));
    PoincarePolynomial pc =
        D % 2 == 1 ? quadric_count(D) : quadric_count(D, Witt::Plus);
    CHECK(chi == pc.evaluate(1));
    CHECK(chi == (D % 2 == 1 ? Int(D + 1) : Int(D + 2)));
  }
}
