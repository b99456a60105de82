#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hesslab/partition.hpp"

using namespace hesslab;

namespace {

// Independent enumeration: all compositions with bounded parts, sorted and
// deduplicated.
std::set<std::vector<int>> partitions_by_compositions(int n, int max_part) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      std::vector<int> s = cur;
      std::sort(s.rbegin(), s.rend());
      out.insert(s);
      return;
    }
    for (int p = 1; p <= std::min(rest, max_part); ++p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace

TEST_CASE("partition construction validates") {
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
  CHECK(Partition({3, 2, 1}).n_total() == 6);
  CHECK(Partition::from_exponents(2, 1, 3).parts() == std::vector<int>({3, 3, 2, 1, 1, 1}));
  CHECK(Partition({3, 3, 2}).to_string() == "3^2.2");
}

TEST_CASE("partitions_of matches the composition oracle") {
  for (int n = 1; n <= 11; ++n) {
    for (int mp : {1, 2, 3, n}) {
      auto got = partitions_of(n, mp);
      auto want = partitions_by_compositions(n, mp);
      REQUIRE(got.size() == want.size());
      std::set<std::vector<int>> gotset;
      for (const Partition& p : got) {
        CHECK(p.n_total() == n);
        CHECK(p.max_part() <= mp);
        gotset.insert(p.parts());
      }
      CHECK(gotset == want);
    }
  }
}

TEST_CASE("partitions_of frozen examples and order") {
  auto ps = partitions_of(5, 3);
  REQUIRE(ps.size() == 5);
  CHECK(ps[0] == Partition({3, 2}));
  CHECK(ps[1] == Partition({3, 1, 1}));
  CHECK(ps[2] == Partition({2, 2, 1}));
  CHECK(ps[3] == Partition({2, 1, 1, 1}));
  CHECK(ps[4] == Partition({1, 1, 1, 1, 1}));

  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(7, 3).size() == 8);

  // reverse-lexicographic order
  for (int n : {6, 9}) {
    auto all = partitions_of(n);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i + 1].parts() < all[i].parts());
  }
}

TEST_CASE("transpose is an involution and reverses dominance") {
  CHECK(transpose(Partition({3, 2})) == Partition({2, 2, 1}));
  CHECK(transpose(Partition({1, 1, 1, 1, 1})) == Partition({5}));
  CHECK(transpose(Partition({3, 1, 1})) == Partition({3, 1, 1}));

  auto all = partitions_of(8);
  for (const Partition& p : all) CHECK(transpose(transpose(p)) == p);
  for (const Partition& p : all)
    for (const Partition& q : all)
      CHECK(dominance_leq(p, q) == dominance_leq(transpose(q), transpose(p)));
}

TEST_CASE("dominance is a partial order") {
  CHECK(dominance_leq(Partition({2, 2, 1}), Partition({3, 2})));
  CHECK_THROWS_AS(dominance_leq(Partition({2, 1}), Partition({2, 2})), std::invalid_argument);

  auto all = partitions_of(7);
  for (const Partition& p : all) CHECK(dominance_leq(p, p));
  for (const Partition& p : all)
    for (const Partition& q : all) {
      if (dominance_leq(p, q) && dominance_leq(q, p)) CHECK(p == q);
      for (const Partition& r : all)
        if (dominance_leq(p, q) && dominance_leq(q, r)) CHECK(dominance_leq(p, r));
    }
}

TEST_CASE("closure membership of order-2 orbits below the E-family images") {
  // 2^i 1^{N-2i} lies below 3^{m-1} 2 1^{N+1-3m} exactly when i <= 2m-1.
  for (int N : {7, 9, 11})
    for (int m = 2; 3 * m <= N + 1; ++m) {
      Partition image = Partition::from_exponents(m - 1, 1, N + 1 - 3 * m);
      for (int i = 0; 2 * i <= N; ++i) {
        Partition p = Partition::from_exponents(0, i, N - 2 * i);
        CHECK(dominance_leq(p, image) == (i <= 2 * m - 1));
      }
    }
}
