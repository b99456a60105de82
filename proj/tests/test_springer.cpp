#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hesslab/springer.hpp"

using namespace hesslab;

TEST_CASE("even images, proven anchors") {
  // j = 0 row: order-2 orbits
  for (int n = 1; n <= 12; ++n)
    for (int i = 1; i <= n; ++i) {
      FourierImage m = fourier_image_even(n, i, 0);
      CHECK(m.status == FourierStatus::Proven);
      CHECK(m.system.kind == SystemKind::Trivial);
      Partition want = 2 * i <= n ? Partition::from_exponents(0, 2 * i, 2 * n - 4 * i + 1)
                                  : Partition::from_exponents(0, 2 * n - 2 * i + 1, 4 * i - 2 * n - 1);
      CHECK(m.orbit == want);
    }
  // (i, j) = (n, 1): the four-quadric example
  for (int n = 3; n <= 8; ++n) {
    FourierImage m = fourier_image_even(n, n, 1);
    CHECK(m.status == FourierStatus::Proven);
    CHECK(m.orbit == Partition::from_exponents(1, 1, 2 * n - 4));
  }
  // (4, 4, 0) goes through the middle case
  CHECK(fourier_image_even(4, 4, 0).orbit == Partition::from_exponents(0, 1, 7));

  CHECK_THROWS_AS(fourier_image_even(4, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(fourier_image_even(4, 3, 2), std::invalid_argument);
}

TEST_CASE("odd images, proven anchors") {
  for (int n = 2; n <= 8; ++n) {
    FourierImage m = fourier_image_odd(n, n, 1);
    CHECK(m.status == FourierStatus::Proven);
    CHECK(m.orbit == Partition::from_exponents(1, 0, 2 * n - 2));
    CHECK(m.system.kind == SystemKind::E1);
  }
  for (int n = 4; n <= 8; ++n) {
    FourierImage a = fourier_image_odd(n, n, 2);
    CHECK(a.status == FourierStatus::Proven);
    CHECK(a.orbit == Partition::from_exponents(1, 2, 2 * n - 6));
    CHECK(a.system.kind == SystemKind::E1);

    FourierImage b = fourier_image_odd(n, n - 1, 1);
    CHECK(b.status == FourierStatus::Proven);
    CHECK(b.orbit == Partition::from_exponents(1, 2, 2 * n - 6));
    CHECK(b.system.kind == SystemKind::E2);

    // the remaining system on that orbit is hit by an (i, 1) label through
    // the third case, consistent with the open index in the five-quadric
    // analysis
    FourierImage c = fourier_image_odd(n, 2, 1);
    CHECK(c.orbit == Partition::from_exponents(1, 2, 2 * n - 6));
    CHECK(c.system.kind == SystemKind::E3);
    CHECK(c.status == FourierStatus::Conjectural);
  }
  CHECK_THROWS_AS(fourier_image_odd(4, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(fourier_image_odd(4, 4, 3), std::invalid_argument);
}

TEST_CASE("proven matchings") {
  auto list = proven_matchings(2);
  // contains F_1 <-> minimal orbit with its nontrivial system
  bool minimal = false, zero = false;
  for (const FourierImage& m : list) {
    if (m.source.family == MonoFamily::Etilde && m.source.i == 3 && m.source.j == 1) {
      minimal = m.orbit == Partition({2, 1, 1, 1}) &&
                m.system.kind == SystemKind::OrbitNontrivial;
    }
    if (m.source.family == MonoFamily::Etilde && m.source.i == 3 && m.source.j == 0)
      zero = m.orbit == Partition({1, 1, 1, 1, 1}) && m.system.kind == SystemKind::Trivial;
    CHECK(m.status == FourierStatus::Proven);
  }
  CHECK(minimal);
  CHECK(zero);

  // Etilde mirror rows share the orbit of their Lemma-4.5 partners
  for (int n = 2; n <= 6; ++n)
    for (const FourierImage& m : proven_matchings(n))
      if (m.source.family == MonoFamily::Etilde && m.source.j == 0 &&
          m.source.i <= (m.source.N - 1) / 2) {
        int n_loc = (m.source.N - 1) / 2;
        CHECK(m.orbit == fourier_image_even(n_loc, n_loc + 1 - m.source.i, 0).orbit);
      }

  // E_{n,2} row appears from n = 3 on
  bool has_e_n2 = false;
  for (const FourierImage& m : proven_matchings(3))
    if (m.source.family == MonoFamily::E && m.source.i == 3 && m.source.j == 2) has_e_n2 = true;
  CHECK(has_e_n2);
}

TEST_CASE("consistency suite passes for n up to 12") {
  for (int n = 1; n <= 12; ++n) {
    SpringerReport rep = consistency_suite(n);
    REQUIRE(rep.checks.size() == 7);
    for (const CheckResult& c : rep.checks) {
      INFO("n=" << n << " check=" << c.name << " lhs=" << c.lhs << " rhs=" << c.rhs);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("odd-case counting anchors") {
  auto count_for = [](int n) {
    for (const CheckResult& c : consistency_suite(n).checks)
      if (c.name == "odd_exhaustion") return std::make_pair(c.lhs, c.rhs);
    return std::make_pair(-1L, -1L);
  };
  CHECK(count_for(2) == std::make_pair(1L, 1L));
  CHECK(count_for(3) == std::make_pair(2L, 2L));
  CHECK(count_for(4) == std::make_pair(4L, 4L));
}

TEST_CASE("even-case bijection at n = 2") {
  std::set<Partition> images;
  for (int i = 1; i <= 2; ++i) images.insert(fourier_image_even(2, i, 0).orbit);
  std::set<Partition> want = {Partition({2, 2, 1}), Partition({2, 1, 1, 1})};
  CHECK(images == want);
}

TEST_CASE("report structure") {
  SpringerReport rep = consistency_suite(4);
  CHECK(rep.n == 4);
  CHECK(rep.all_pass());
  // map covers the whole catalog: E labels, Etilde proven rows, Etilde unknowns
  long unknowns = 0;
  for (const FourierImage& m : rep.map)
    if (m.status == FourierStatus::Unknown) {
      ++unknowns;
      CHECK(m.source.family == MonoFamily::Etilde);
      CHECK(m.source.j >= 1);
    }
  CHECK(unknowns == 6);  // Etilde(i,j), 1 <= j < i <= 4
}
