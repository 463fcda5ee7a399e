#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "crossnest/format.hpp"
#include "crossnest/partition.hpp"
#include "crossnest/variants.hpp"

using namespace crossnest;

namespace {

std::vector<Arc> arcs(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Arc> v;
  for (auto [a, b] : xs) v.push_back({a, b});
  return v;
}

bool is_matching(const ColoredSetPartition& cp) {
  for (const auto& b : cp.base().blocks())
    if (b.size() > 2) return false;
  return true;
}

}  // namespace

TEST_CASE("require_matching accepts blocks of size at most two") {
  require_matching(ColoredSetPartition::from_arcs(3, {{1, 3, 1}}, 1));
  auto blocky = ColoredSetPartition::from_arcs(3, {{1, 2, 1}, {2, 3, 1}}, 1);
  CHECK_THROWS_AS(require_matching(blocky), NotAMatching);
}

TEST_CASE("doubling sends arcs to even-odd pairs and keeps the statistics") {
  auto cp = ColoredSetPartition::from_arcs(2, {{1, 2, 1}}, 1);
  auto d = double_partition(cp);
  CHECK(d.n() == 4);
  CHECK(arcs_of(d.base()) == arcs({{2, 3}}));

  for (int n = 0; n <= 5; ++n)
    for (const auto& p : colored_partitions_of(n, 2)) {
      auto img = double_partition(p);
      CHECK(img.n() == 2 * n);
      CHECK(is_matching(img));
      for (const auto& a : img.colored_arcs()) {
        CHECK(a.left % 2 == 0);
        CHECK(a.right % 2 == 1);
      }
      CHECK(cr_ne(img) == cr_ne(p));
    }
}

TEST_CASE("matching enumeration counts") {
  const std::vector<std::size_t> involutions = {1, 1, 2, 4, 10, 26};
  for (int n = 0; n < static_cast<int>(involutions.size()); ++n)
    CHECK(enumerate_matchings(n, 1).size() == involutions[static_cast<std::size_t>(n)]);
  CHECK(enumerate_complete_matchings(4, 1).size() == 3);
  CHECK(enumerate_complete_matchings(6, 1).size() == 15);
  CHECK(enumerate_complete_matchings(5, 1).empty());
  CHECK(enumerate_complete_matchings(4, 2).size() == 12);
}

TEST_CASE("enhanced partitions carry loops at exactly the isolated points") {
  auto e = EnhancedColoredPartition::from_arcs(3, {{1, 3, 1}, {2, 2, 2}}, 2);
  CHECK(e.n() == 3);
  auto ea = e.enhanced_arcs();
  REQUIRE(ea.size() == 2);
  CHECK(ea[0] == ColoredArc{1, 3, 1});
  CHECK(ea[1] == ColoredArc{2, 2, 2});

  // loop on a joined point, missing loop, doubled loop
  CHECK_THROWS_AS(EnhancedColoredPartition::from_arcs(2, {{1, 2, 1}, {1, 1, 1}}, 1), Error);
  CHECK_THROWS_AS(EnhancedColoredPartition::from_arcs(2, {{1, 1, 1}}, 1), Error);
  CHECK_THROWS_AS(EnhancedColoredPartition::from_arcs(1, {{1, 1, 1}, {1, 1, 1}}, 1), Error);
}

TEST_CASE("enhanced chains use the weak middle inequality") {
  CHECK(enhanced_chain_stats({}) == CrossNestStats{0, 0});
  CHECK(enhanced_chain_stats(arcs({{2, 2}})) == CrossNestStats{1, 1});
  CHECK(enhanced_chain_stats(arcs({{1, 3}, {2, 2}})) == CrossNestStats{1, 2});
  CHECK(enhanced_chain_stats(arcs({{1, 2}, {2, 3}})) == CrossNestStats{2, 1});
  CHECK(enhanced_chain_stats(arcs({{1, 1}, {2, 2}})) == CrossNestStats{1, 1});
  CHECK(enhanced_chain_stats(arcs({{1, 3}, {2, 4}})) == CrossNestStats{2, 1});
}

TEST_CASE("enhanced enumeration sizes") {
  const std::vector<std::size_t> bell = {1, 1, 2, 5, 15};
  for (int n = 0; n < static_cast<int>(bell.size()); ++n)
    CHECK(enumerate_enhanced(n, 1).size() == bell[static_cast<std::size_t>(n)]);
  CHECK(enumerate_enhanced(2, 2).size() == 6);
}

TEST_CASE("enhanced partitions embed as odd-even matchings") {
  auto e = EnhancedColoredPartition::from_arcs(3, {{1, 3, 1}, {2, 2, 2}}, 2);
  auto m = enhanced_to_matching(e);
  CHECK(m.n() == 6);
  auto ca = m.colored_arcs();
  REQUIRE(ca.size() == 2);
  CHECK(ca[0] == ColoredArc{1, 6, 1});
  CHECK(ca[1] == ColoredArc{3, 4, 2});

  std::set<ColoredSetPartition> images;
  for (int n = 0; n <= 4; ++n)
    for (const auto& x : enumerate_enhanced(n, 2)) {
      auto img = enhanced_to_matching(x);
      CHECK(is_matching(img));
      for (const auto& a : img.colored_arcs()) {
        CHECK(a.left % 2 == 1);
        CHECK(a.right % 2 == 0);
      }
      CHECK(cr_ne(img) == enhanced_stats(x));
      CHECK(images.insert(img).second);
    }
}

TEST_CASE("permutation constructor validates word and colors") {
  CHECK_THROWS_AS(ColoredPermutation({2, 2}, {1}, {1}, 1), OutOfRange);
  CHECK_THROWS_AS(ColoredPermutation({0, 1}, {1}, {1}, 1), OutOfRange);
  CHECK_THROWS_AS(ColoredPermutation({2, 1}, {1, 1}, {1}, 1), OutOfRange);
  CHECK_THROWS_AS(ColoredPermutation({2, 1}, {1}, {2}, 1), OutOfRange);
}

TEST_CASE("weak exceedances split the arcs of a permutation") {
  ColoredPermutation id({1}, {1}, {}, 1);
  auto [iu, il] = permutation_to_matching_pair(id);
  CHECK(arcs_of(iu.base()) == arcs({{1, 2}}));
  CHECK(arcs_of(il.base()).empty());

  ColoredPermutation tr({2, 1}, {1}, {1}, 1);
  CHECK(tr.upper_arcs() == std::vector<ColoredArc>{{1, 2, 1}});
  CHECK(tr.lower_arcs() == std::vector<ColoredArc>{{1, 2, 1}});
  auto [tu, tl] = permutation_to_matching_pair(tr);
  CHECK(arcs_of(tu.base()) == arcs({{1, 4}}));
  CHECK(arcs_of(tl.base()) == arcs({{2, 3}}));
  CHECK(permutation_stats(tr) == CrossNestStats{1, 1});
}

TEST_CASE("permutation statistics on one-line goldens") {
  CHECK(permutation_stats(ColoredPermutation({}, {}, {}, 1)) == CrossNestStats{0, 0});
  CHECK(permutation_stats(ColoredPermutation({2, 3, 1}, {1, 1}, {1}, 1)) ==
        CrossNestStats{2, 1});
  CHECK(permutation_stats(ColoredPermutation({3, 2, 1}, {1, 1}, {1}, 1)) ==
        CrossNestStats{1, 2});
}

TEST_CASE("matching pairs round-trip through permutations") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& s : enumerate_permutations(n, 2)) {
      auto [up, lo] = permutation_to_matching_pair(s);
      CHECK(matching_pair_to_permutation(up, lo) == s);
      if (n >= 1) {
        CrossNestStats st = permutation_stats(s);
        CHECK(st.cr >= 1);
        CHECK(st.ne >= 1);
      }
    }
}

TEST_CASE("mismatched matchings are rejected as permutation pairs") {
  auto up = ColoredSetPartition::from_arcs(4, {{1, 2, 1}}, 1);
  auto lo = ColoredSetPartition::from_arcs(4, {{2, 3, 1}}, 1);
  CHECK_THROWS_AS(matching_pair_to_permutation(up, lo), NotAPermutationPair);
}

TEST_CASE("permutation enumeration counts r^n times n factorial") {
  CHECK(enumerate_permutations(0, 1).size() == 1);
  CHECK(enumerate_permutations(2, 2).size() == 8);
  CHECK(enumerate_permutations(3, 1).size() == 6);
  CHECK(enumerate_permutations(3, 2).size() == 48);
}

TEST_CASE("noncrossing permutations are counted by the Catalan numbers") {
  const std::vector<int> catalan = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) {
    int hits = 0;
    for (const auto& s : enumerate_permutations(n, 1))
      if (permutation_stats(s).cr <= 1) ++hits;
    CHECK(hits == catalan[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("tangled arcs respect the slot discipline") {
  // lone departure leaves the second copy, lone arrival lands on the first
  CHECK_NOTHROW(TangledDiagram(2, {{{1, true}, {2, false}, 1}}, 1));
  CHECK_THROWS_AS(TangledDiagram(2, {{{1, false}, {2, false}, 1}}, 1), Error);
  CHECK_THROWS_AS(TangledDiagram(2, {{{1, true}, {2, true}, 1}}, 1), Error);
  // loops occupy both copies of their vertex
  CHECK_NOTHROW(TangledDiagram(1, {{{1, false}, {1, true}, 1}}, 1));
  // endpoints must come in increasing slot order
  CHECK_THROWS_AS(TangledDiagram(2, {{{2, false}, {1, true}, 1}}, 1), OutOfRange);
  CHECK_THROWS_AS(TangledDiagram(2, {{{1, true}, {1, true}, 1}}, 1), OutOfRange);
  // no slot reuse, colors within range, vertices within range
  CHECK_THROWS_AS(TangledDiagram(2,
                                 {{{1, true}, {2, false}, 1}, {{1, true}, {2, false}, 1}},
                                 1),
                  DuplicateEndpoint);
  CHECK_THROWS_AS(TangledDiagram(2, {{{1, true}, {2, false}, 3}}, 2), OutOfRange);
  CHECK_THROWS_AS(TangledDiagram(2, {{{1, true}, {3, false}, 1}}, 1), OutOfRange);
}

TEST_CASE("inflation opens each vertex into two slots") {
  TangledDiagram chord(2, {{{1, true}, {2, false}, 1}}, 1);
  CHECK(print_partition(inflate(chord)) == "n=4; arcs=2-3");
  CHECK(deflate(inflate(chord)) == chord);

  TangledDiagram transit(3, {{{1, true}, {2, true}, 1}, {{2, false}, {3, false}, 1}}, 1);
  CHECK(print_partition(inflate(transit)) == "n=6; arcs=2-4,3-5");
  CHECK(print_tangled(transit) == "n=3; arcs=1-2',2'-3");
}

TEST_CASE("deflation accepts exactly the slot-disciplined matchings") {
  auto bad = ColoredSetPartition::from_arcs(4, {{1, 4, 1}}, 1);
  CHECK_THROWS_AS(deflate(bad), NotAnInflation);

  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_matchings(2 * n, 1)) {
      auto mins = m.min_set();
      auto maxs = m.max_set();
      auto isolated = [&](int v) {
        return std::binary_search(mins.begin(), mins.end(), v) &&
               std::binary_search(maxs.begin(), maxs.end(), v);
      };
      bool image = true;
      for (int v = 1; v <= n; ++v) {
        if (isolated(2 * v) && !std::binary_search(maxs.begin(), maxs.end(), 2 * v - 1))
          image = false;
        if (isolated(2 * v - 1) && !std::binary_search(mins.begin(), mins.end(), 2 * v))
          image = false;
      }
      bool ok = true;
      try {
        TangledDiagram t = deflate(m);
        CHECK(inflate(t) == m);
        CHECK(tangled_stats(t) == cr_ne(m));
      } catch (const NotAnInflation&) {
        ok = false;
      }
      CHECK(ok == image);
    }
}

TEST_CASE("tangled enumeration counts") {
  CHECK(enumerate_tangled(1, 1).size() == 2);
  CHECK(enumerate_tangled(2, 1).size() == 7);
  CHECK(enumerate_tangled(3, 1).size() == 40);
  CHECK(enumerate_tangled(2, 2).size() == 19);
  for (const auto& t : enumerate_tangled(3, 2)) CHECK(deflate(inflate(t)) == t);
}
