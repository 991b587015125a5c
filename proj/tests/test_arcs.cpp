#include <doctest.h>

#include <set>

#include "crossmap/arcs.hpp"
#include "crossmap/error.hpp"
#include "oracles.hpp"

using namespace crossmap;

namespace {

const PartialPartition kExample = parse_partition("9:1,4,7,9/2,5/3/6");

std::vector<Arc> A(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Arc> out;
  for (auto [l, r] : pairs) out.push_back({l, r});
  return out;
}

}  // namespace

TEST_CASE("arcs_classical joins consecutive block elements") {
  CHECK(arcs_classical(kExample).arcs == A({{1, 4}, {2, 5}, {4, 7}, {7, 9}}));
  CHECK(arcs_classical(kExample).mode == ArcMode::classical);
  CHECK(arcs_classical(PartialPartition::singletons(4)).empty());
  CHECK(arcs_classical(parse_partition("3:1,2,3")).arcs == A({{1, 2}, {2, 3}}));
}

TEST_CASE("arcs_enhanced adds a loop per singleton") {
  CHECK(arcs_enhanced(kExample).arcs == A({{1, 4}, {2, 5}, {3, 3}, {4, 7}, {6, 6}, {7, 9}}));
  CHECK(arcs_enhanced(PartialPartition::empty(5)).empty());
  CHECK(arcs_enhanced(PartialPartition::singletons(3)).arcs == A({{1, 1}, {2, 2}, {3, 3}}));
}

TEST_CASE("distance multiset") {
  CHECK(distance_multiset(arcs_enhanced(kExample)) == std::vector<int>{0, 0, 2, 3, 3, 3});
  CHECK(distance_multiset(arcs_classical(parse_partition("10:1,5/2,6,7,10/3,4,8/9"))) ==
        std::vector<int>{1, 1, 3, 4, 4, 4});
  CHECK(distance_multiset(ArcSet{}).empty());
}

TEST_CASE("arc counts match block structure") {
  for (const auto& p : enumerate_partial(7)) {
    const auto classical = arcs_classical(p);
    const auto enhanced = arcs_enhanced(p);
    int singletons = 0;
    for (const auto& b : blocks_of(p)) singletons += b.size() == 1 ? 1 : 0;
    REQUIRE(static_cast<int>(classical.size()) == p.present_count() - p.block_count());
    REQUIRE(static_cast<int>(enhanced.size()) == static_cast<int>(classical.size()) + singletons);
  }
}

TEST_CASE("enhanced arcs are the classical arcs plus the singleton loops") {
  for (const auto& p : enumerate_partial(7)) {
    const auto classical = arcs_classical(p);
    const auto enhanced = arcs_enhanced(p);
    std::vector<Arc> non_loops;
    std::set<int> loops;
    for (const auto& a : enhanced) {
      if (a.is_loop()) {
        loops.insert(a.left);
      } else {
        non_loops.push_back(a);
      }
    }
    REQUIRE(non_loops == classical.arcs);
    std::set<int> singletons;
    for (const auto& b : blocks_of(p)) {
      if (b.size() == 1) singletons.insert(b[0]);
    }
    REQUIRE(loops == singletons);
  }
}

TEST_CASE("arc sets agree with consecutive pairs computed from blocks") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& blocks : oracle::partial_partitions(n)) {
      const auto p = from_blocks(n, blocks);
      for (bool enhanced : {false, true}) {
        std::vector<Arc> expected;
        for (auto [a, b] : oracle::pairs_of(blocks, enhanced)) expected.push_back({a, b});
        REQUIRE(arcs_of(p, enhanced ? ArcMode::enhanced : ArcMode::classical).arcs == expected);
      }
    }
  }
}

TEST_CASE("left and right endpoints are pairwise distinct, arcs sorted") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : enumerate_full(n)) {
      for (auto mode : {ArcMode::classical, ArcMode::enhanced}) {
        const auto arcs = arcs_of(p, mode);
        std::set<int> lefts;
        std::set<int> rights;
        for (const auto& a : arcs) {
          lefts.insert(a.left);
          rights.insert(a.right);
          if (mode == ArcMode::classical) REQUIRE_FALSE(a.is_loop());
        }
        REQUIRE(lefts.size() == arcs.size());
        REQUIRE(rights.size() == arcs.size());
        REQUIRE(std::is_sorted(arcs.begin(), arcs.end()));
      }
    }
  }
}

TEST_CASE("partition_from_arcs recovers every partial partition") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : enumerate_partial(n)) REQUIRE(partition_from_arcs(n, arcs_enhanced(p)) == p);
  }
}

TEST_CASE("partition_from_arcs rejects bad arcs") {
  CHECK_THROWS_AS(partition_from_arcs(3, ArcSet{ArcMode::enhanced, A({{1, 4}})}), Error);
  CHECK_THROWS_AS(partition_from_arcs(3, ArcSet{ArcMode::enhanced, A({{2, 1}})}), Error);
  CHECK_THROWS_AS(partition_from_arcs(4, ArcSet{ArcMode::enhanced, A({{1, 3}, {2, 3}})}), Error);
  CHECK_THROWS_AS(partition_from_arcs(4, ArcSet{ArcMode::enhanced, A({{1, 3}, {1, 4}})}), Error);
}

TEST_CASE("arc mode names") {
  CHECK(to_string(ArcMode::enhanced) == "enhanced");
  CHECK(parse_arc_mode("classical") == ArcMode::classical);
  CHECK_THROWS_AS(parse_arc_mode("fancy"), Error);
}
