#include <catch2/catch_amalgamated.hpp>

#include "hesslab/io.hpp"
#include "hesslab/orbits.hpp"

using namespace hesslab;

TEST_CASE("orbit_dimension frozen values") {
  CHECK(orbit_dimension(Partition({1, 1, 1, 1, 1})) == 0);
  CHECK(orbit_dimension(Partition({2, 1, 1, 1})) == 4);
  CHECK(orbit_dimension(Partition({3, 1, 1})) == 7);
  CHECK(orbit_dimension(Partition({5})) == 10);
  CHECK_THROWS_AS(orbit_dimension(Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("orbit_parity matches the 3/2 multiplicity rule and the dimension") {
  CHECK(orbit_parity(Partition({3, 1, 1})) == Parity::Odd);
  CHECK(orbit_parity(Partition({3, 2, 1, 1})) == Parity::Even);
  CHECK(orbit_parity(Partition({1, 1, 1, 1, 1, 1, 1})) == Parity::Even);
  CHECK_THROWS_AS(orbit_parity(Partition({4, 1})), std::domain_error);

  for (int N = 3; N <= 21; N += 2)
    for (const Partition& p : partitions_of(N, 3)) {
      Parity from_dim = orbit_dimension(p) % 2 == 0 ? Parity::Even : Parity::Odd;
      CHECK(orbit_parity(p) == from_dim);
    }
}

TEST_CASE("has_gaps") {
  CHECK(has_gaps(Partition({3, 2})));
  CHECK_FALSE(has_gaps(Partition({2, 2, 1})));
  CHECK_FALSE(has_gaps(Partition({1, 1, 1, 1, 1})));
  CHECK(has_gaps(Partition({3, 1, 1})));
  CHECK_FALSE(has_gaps(Partition({3, 2, 1, 1})));
}

TEST_CASE("local_systems frozen cases") {
  auto ls = local_systems(Partition({3, 2, 2, 1, 1}));
  REQUIRE(ls.size() == 4);
  CHECK(ls[0].kind == SystemKind::Trivial);
  CHECK(ls[1].kind == SystemKind::E1);
  CHECK(ls[2].kind == SystemKind::E2);
  CHECK(ls[3].kind == SystemKind::E3);

  auto ls2 = local_systems(Partition({2, 2, 1}));
  REQUIRE(ls2.size() == 2);
  CHECK(ls2[1].kind == SystemKind::OrbitNontrivial);

  CHECK(local_systems(Partition({1, 1, 1, 1, 1})).size() == 1);
  CHECK(local_systems(Partition({3, 3, 3})).size() == 1);
  CHECK(local_systems(Partition({3, 1, 1})).size() == 2);
  CHECK(local_systems(Partition({3, 1, 1}))[1].kind == SystemKind::E1);
  CHECK(local_systems(Partition({3, 2, 2}))[1].kind == SystemKind::E3);
  CHECK_THROWS_AS(local_systems(Partition({4, 1})), std::domain_error);
}

TEST_CASE("local_systems count is 2^(d-1)") {
  for (int N = 3; N <= 13; N += 2)
    for (const Partition& p : partitions_of(N, 3)) {
      std::size_t want = std::size_t(1) << (p.distinct_parts() - 1);
      CHECK(local_systems(p).size() == want);
    }
}

TEST_CASE("orbit descriptors and JSON") {
  auto rows = orbits_n3(2);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].partition == Partition({3, 2}));
  CHECK(rows[0].dim == 8);
  CHECK(rows[0].order3);
  CHECK(rows[0].gaps);

  json j = describe_orbit(Partition({3, 2, 1, 1}));
  CHECK(j["partition"] == json({3, 2, 1, 1}));
  CHECK(j["parity"] == "even");
  CHECK(j["order3"] == true);
  CHECK(j["gaps"] == false);
  CHECK(j["dim"].get<long>() == orbit_dimension(Partition({3, 2, 1, 1})));

  CHECK_THROWS_AS(orbits_n3(0), std::invalid_argument);
}
