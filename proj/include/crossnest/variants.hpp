#pragma once

#include <utility>
#include <vector>

#include "crossnest/partition.hpp"

namespace crossnest {

// --- matchings -------------------------------------------------------------

// Blocks of size one or two; throws NotAMatching otherwise.
void require_matching(const ColoredSetPartition& cp);

// (i, j):c -> (2i, 2j-1):c.  The image is a matching of [2n] whose left
// endpoints are even and right endpoints odd; statistics are preserved.
ColoredSetPartition double_partition(const ColoredSetPartition& cp);

std::vector<ColoredSetPartition> enumerate_matchings(int n, int r);
std::vector<ColoredSetPartition> enumerate_complete_matchings(int n, int r);

// --- enhanced partitions ----------------------------------------------------

// A partition whose isolated points carry colored loops in addition to the
// ordinary colored arcs.  Enhanced arcs are the loops (i, i) at singleton
// blocks plus arcs_of(base), sorted by (left, right).
class EnhancedColoredPartition {
 public:
  EnhancedColoredPartition() = default;
  EnhancedColoredPartition(SetPartition base, std::vector<int> colors, int r);
  static EnhancedColoredPartition from_arcs(int n, const std::vector<ColoredArc>& arcs, int r);

  int n() const { return base_.n(); }
  int r() const { return r_; }
  const SetPartition& base() const { return base_; }
  const std::vector<int>& colors() const { return colors_; }
  std::vector<ColoredArc> enhanced_arcs() const;

  auto operator<=>(const EnhancedColoredPartition&) const = default;

 private:
  SetPartition base_;
  std::vector<int> colors_;
  int r_ = 1;
};

// Chain statistics where the middle inequality is weak: a k-crossing is
// i_1 < ... < i_k <= j_1 < ... < j_k, a k-nesting i_1 < ... < i_k <= j_k <
// ... < j_1.  Loops (left == right) are allowed.
CrossNestStats enhanced_chain_stats(const std::vector<Arc>& arcs);

CrossNestStats enhanced_stats(const EnhancedColoredPartition& e);

// (i, j):c -> (2i-1, 2j):c, loops included; a statistics-preserving matching
// of [2n] with odd left endpoints and even right endpoints.
ColoredSetPartition enhanced_to_matching(const EnhancedColoredPartition& e);

std::vector<EnhancedColoredPartition> enumerate_enhanced(int n, int r);

// --- colored permutations ---------------------------------------------------

// A permutation with one color per position: weak exceedances (i <= s(i))
// form the upper arc family, the rest the lower family.
class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  // word is one-line notation; upper/lower colors run parallel to
  // upper_arcs()/lower_arcs().
  ColoredPermutation(std::vector<int> word, std::vector<int> upper_colors,
                     std::vector<int> lower_colors, int r);

  int n() const { return static_cast<int>(word_.size()); }
  int r() const { return r_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<int>& upper_colors() const { return upper_colors_; }
  const std::vector<int>& lower_colors() const { return lower_colors_; }
  std::vector<ColoredArc> upper_arcs() const;  // (i, s(i)) for i <= s(i), by i
  std::vector<ColoredArc> lower_arcs() const;  // (s(i), i) for s(i) < i, by s(i)

  auto operator<=>(const ColoredPermutation&) const = default;

 private:
  std::vector<int> word_;
  std::vector<int> upper_colors_, lower_colors_;
  int r_ = 1;
};

// Upper family uses the weak (enhanced) statistics, lower the strict ones;
// the result is the componentwise maximum.
CrossNestStats permutation_stats(const ColoredPermutation& s);

// Upper arcs map by (i, j) -> (2i-1, 2j), lower by (i, j) -> (2i, 2j-1),
// giving two matchings of [2n] that carry the statistics separately.
std::pair<ColoredSetPartition, ColoredSetPartition> permutation_to_matching_pair(
    const ColoredPermutation& s);

// Inverse; requires odd positions to split into upper left endpoints and
// lower right endpoints, and evens dually.  Throws NotAPermutationPair.
ColoredPermutation matching_pair_to_permutation(const ColoredSetPartition& upper,
                                                const ColoredSetPartition& lower);

std::vector<ColoredPermutation> enumerate_permutations(int n, int r);

// --- tangled diagrams -------------------------------------------------------

// Endpoint of a tangled arc: each vertex v owns two inflation slots,
// 2v-1 (first) and 2v (second).
struct TangledEnd {
  int vertex = 0;
  bool second = false;
  int position() const { return 2 * vertex - 1 + (second ? 1 : 0); }
  auto operator<=>(const TangledEnd&) const = default;
};

struct TangledArc {
  TangledEnd from, to;
  int color = 1;
  auto operator<=>(const TangledArc&) const = default;
};

// Vertices of degree <= 2 whose slot usage matches the allowed local
// configurations: a lone departure leaves the second slot, a lone arrival
// lands on the first, a loop occupies both, and any two-ended vertex uses
// both slots (the slot choice distinguishes crossed from nested transits and
// parallel edges).
class TangledDiagram {
 public:
  TangledDiagram() = default;
  TangledDiagram(int n, std::vector<TangledArc> arcs, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<TangledArc>& arcs() const { return arcs_; }

  auto operator<=>(const TangledDiagram&) const = default;

 private:
  int n_ = 0;
  std::vector<TangledArc> arcs_;
  int r_ = 1;
};

// The matching of [2n] on the slots.
ColoredSetPartition inflate(const TangledDiagram& t);

// Inverse; accepts exactly the matchings where an isolated 2i implies 2i-1
// is a block maximum and an isolated 2i-1 implies 2i is a block minimum.
// Throws NotAnInflation otherwise.
TangledDiagram deflate(const ColoredSetPartition& m);

CrossNestStats tangled_stats(const TangledDiagram& t);

std::vector<TangledDiagram> enumerate_tangled(int n, int r);

}  // namespace crossnest
