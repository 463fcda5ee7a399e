#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "crossnest/partition.hpp"

using namespace crossnest;

namespace {

SetPartition part(int n, std::vector<std::vector<int>> blocks) {
  return SetPartition::from_blocks(n, std::move(blocks));
}

std::vector<Arc> arcs(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Arc> v;
  for (auto [a, b] : xs) v.push_back({a, b});
  return v;
}

}  // namespace

TEST_CASE("arcs join consecutive elements within a block") {
  SetPartition p = part(7, {{1, 3, 4, 7}, {2, 6}, {5}});
  CHECK(arcs_of(p) == arcs({{1, 3}, {2, 6}, {3, 4}, {4, 7}}));
  CHECK(p.min_set() == std::vector<int>{1, 2, 5});
  CHECK(p.max_set() == std::vector<int>{5, 6, 7});
  CHECK(arcs_of(part(3, {{1}, {2}, {3}})).empty());
}

TEST_CASE("blocks_of inverts arcs_of") {
  for (int n = 0; n <= 7; ++n)
    for (const SetPartition& p : partitions_of(n)) CHECK(blocks_of(n, arcs_of(p)) == p);
}

TEST_CASE("blocks_of rejects malformed arc sets") {
  CHECK_THROWS_AS(blocks_of(4, arcs({{1, 2}, {1, 3}})), DuplicateEndpoint);
  CHECK_THROWS_AS(blocks_of(4, arcs({{1, 3}, {2, 3}})), DuplicateEndpoint);
  CHECK_THROWS_AS(blocks_of(4, arcs({{2, 1}})), OutOfRange);
  CHECK_THROWS_AS(blocks_of(4, arcs({{2, 2}})), OutOfRange);
  CHECK_THROWS_AS(blocks_of(3, arcs({{1, 4}})), OutOfRange);
  CHECK_THROWS_AS(blocks_of(3, arcs({{0, 2}})), OutOfRange);
}

TEST_CASE("from_blocks validates its input") {
  CHECK_THROWS_AS(part(3, {{1, 2}}), OutOfRange);
  CHECK_THROWS_AS(part(2, {{1, 2}, {2}}), DuplicateEntry);
  CHECK_THROWS_AS(part(2, {{1, 2}, {}}), OutOfRange);
  CHECK_THROWS_AS(part(2, {{1, 2, 3}}), OutOfRange);
  CHECK(part(0, {}).n() == 0);
}

TEST_CASE("from_rgs matches from_blocks") {
  CHECK(SetPartition::from_rgs({0, 0, 1}) == part(3, {{1, 2}, {3}}));
  CHECK(SetPartition::from_rgs({0, 1, 0, 1}) == part(4, {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(SetPartition::from_rgs({1}), OutOfRange);
  CHECK_THROWS_AS(SetPartition::from_rgs({0, 2}), OutOfRange);
}

TEST_CASE("partition counts follow the Bell numbers") {
  const std::vector<std::size_t> bell = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n < static_cast<int>(bell.size()); ++n)
    CHECK(partitions_of(n).size() == bell[static_cast<std::size_t>(n)]);
}

TEST_CASE("chain statistics on small arc families") {
  CHECK(chain_stats({}) == CrossNestStats{0, 0});
  CHECK(chain_stats(arcs({{1, 3}, {2, 4}})) == CrossNestStats{2, 1});
  CHECK(chain_stats(arcs({{1, 4}, {2, 3}})) == CrossNestStats{1, 2});
  CHECK(chain_stats(arcs({{1, 2}, {3, 4}})) == CrossNestStats{1, 1});
  CHECK(chain_stats(arcs({{1, 4}, {2, 5}, {3, 6}})) == CrossNestStats{3, 1});
  CHECK(chain_stats(arcs({{1, 6}, {2, 5}, {3, 4}})) == CrossNestStats{1, 3});
}

TEST_CASE("pairwise crossing is not transitive") {
  // (1,4)x(3,6) and (3,6)x(5,8) cross pairwise, (1,4) and (5,8) do not.
  auto a = arcs({{1, 4}, {3, 6}, {5, 8}});
  CHECK(chain_stats(a).cr == 2);
  CHECK(chain_stats_subsets(a).cr == 2);
}

TEST_CASE("chain statistics agree with the subset oracle") {
  for (int n = 0; n <= 8; ++n)
    for (const SetPartition& p : partitions_of(n)) {
      auto a = arcs_of(p);
      CHECK(chain_stats(a) == chain_stats_subsets(a));
    }
}

TEST_CASE("statistics of a colored partition maximize over color classes") {
  auto bi = ColoredSetPartition::from_arcs(4, {{1, 3, 1}, {2, 4, 2}}, 2);
  CHECK(cr_ne(bi) == CrossNestStats{1, 1});
  auto per = cr_ne_per_color(bi);
  REQUIRE(per.size() == 2);
  CHECK(per[0] == CrossNestStats{1, 1});
  CHECK(per[1] == CrossNestStats{1, 1});

  for (const auto& cp : colored_partitions_of(5, 2)) {
    CrossNestStats m{0, 0};
    for (const auto& s : cr_ne_per_color(cp)) {
      m.cr = std::max(m.cr, s.cr);
      m.ne = std::max(m.ne, s.ne);
    }
    CHECK(cr_ne(cp) == m);
  }
}

TEST_CASE("statistics vanish exactly on arcless partitions") {
  for (const auto& cp : colored_partitions_of(4, 2)) {
    bool arcless = cp.colored_arcs().empty();
    CHECK((cr_ne(cp) == CrossNestStats{0, 0}) == arcless);
  }
}

TEST_CASE("split_colors and merge_colors are inverse") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& cp : colored_partitions_of(n, 3)) {
      auto classes = split_colors(cp);
      REQUIRE(classes.size() == 3);
      CHECK(merge_colors(classes) == cp);
    }
}

TEST_CASE("merge_colors rejects clashing endpoints") {
  std::vector<SetPartition> classes = {part(3, {{1, 2}, {3}}), part(3, {{1, 3}, {2}})};
  CHECK_THROWS_AS(merge_colors(classes), EndpointClash);
}

TEST_CASE("colored partition counts") {
  CHECK(colored_partitions_of(2, 3).size() == 4);
  CHECK(colored_partitions_of(3, 2).size() == 11);
  // one factor of r per arc
  for (int n = 0; n <= 5; ++n) {
    BigCount total = 0;
    for (const SetPartition& p : partitions_of(n))
      total += big_pow(3, static_cast<unsigned long>(arcs_of(p).size()));
    CHECK(total == BigCount(colored_partitions_of(n, 3).size()));
  }
}

TEST_CASE("colored constructor validates colors") {
  SetPartition p = part(2, {{1, 2}});
  CHECK_THROWS_AS(ColoredSetPartition(p, {}, 1), OutOfRange);
  CHECK_THROWS_AS(ColoredSetPartition(p, {2}, 1), OutOfRange);
  CHECK_THROWS_AS(ColoredSetPartition(p, {0}, 1), OutOfRange);
  CHECK_THROWS_AS(ColoredSetPartition(p, {1}, 0), OutOfRange);
}

TEST_CASE("minima and maxima filter the colored enumeration") {
  MinMaxFilter f{{1, 2}, {2, 3}};
  auto hits = colored_partitions_of(3, 1, f);
  REQUIRE(hits.size() == 1);
  CHECK(arcs_of(hits[0].base()) == arcs({{1, 3}}));

  JointDistribution d = joint_distribution(3, 1, f);
  REQUIRE(d.size() == 1);
  CHECK(d.at({1, 1}) == 1);
}

TEST_CASE("joint distribution degenerate cases") {
  JointDistribution empty = joint_distribution(0, 2, MinMaxFilter{{}, {}});
  REQUIRE(empty.size() == 1);
  CHECK(empty.at({0, 0}) == 1);

  // all singletons: minima and maxima both exhaust [5]
  JointDistribution singles = joint_distribution(5, 2, MinMaxFilter{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}});
  REQUIRE(singles.size() == 1);
  CHECK(singles.at({0, 0}) == 1);
}

TEST_CASE("histograms over all minima and maxima cover every partition") {
  for (int n = 0; n <= 5; ++n) {
    BigCount mass = 0;
    for (const auto& [key, dist] : joint_distribution_all(n, 2))
      for (const auto& [stats, count] : dist) mass += count;
    CHECK(mass == BigCount(colored_partitions_of(n, 2).size()));
  }
}

TEST_CASE("bounded counts by brute force") {
  CHECK(count_ncn_brute(4, 1, 2, 2) == 13);
  CHECK(count_ncn_brute(3, 2, 2, 2) == 11);
  CHECK(count_ncn_brute(6, 1, 1, std::nullopt) == 1);
  CHECK(count_ncn_brute(6, 1, std::nullopt, 1) == 1);
  CHECK(count_ncn_brute(5, 1, std::nullopt, std::nullopt) == 52);
  CHECK_THROWS_AS(count_ncn_brute(10, 1, 2, 2), Infeasible);
  // explicit bound override; avoiders of [10] under both 2-bounds
  CHECK(count_ncn_brute(10, 1, 2, 2, std::nullopt, 10) == 4181);
}
