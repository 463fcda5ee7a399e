#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crossnest/bigint.hpp"
#include "crossnest/errors.hpp"

namespace crossnest {

// Arc of a set partition: i is joined to the least element of its block
// larger than i.  Arcs therefore have pairwise distinct left endpoints and
// pairwise distinct right endpoints.
struct Arc {
  int left = 0;
  int right = 0;
  auto operator<=>(const Arc&) const = default;
};

struct ColoredArc {
  int left = 0;
  int right = 0;
  int color = 1;
  auto operator<=>(const ColoredArc&) const = default;
};

// cr = largest k with k arcs of one color in the pattern
//   i_1 < ... < i_k < j_1 < ... < j_k  (pairwise crossing),
// ne = largest k with the pattern i_1 < ... < i_k < j_k < ... < j_1
//   (pairwise nesting).  Both are 0 exactly when there are no arcs.
struct CrossNestStats {
  int cr = 0;
  int ne = 0;
  auto operator<=>(const CrossNestStats&) const = default;
};

class SetPartition {
 public:
  SetPartition() = default;  // empty partition of [0]
  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);
  // Restricted growth string: rgs[i] is the block index of element i+1, with
  // rgs[0] == 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
  static SetPartition from_rgs(const std::vector<int>& rgs);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::vector<int> min_set() const;  // block minima, ascending
  std::vector<int> max_set() const;  // block maxima, ascending

  auto operator<=>(const SetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;  // sorted by minimum, elements ascending
};

// Arcs sorted by left endpoint.
std::vector<Arc> arcs_of(const SetPartition& p);

// Inverse of arcs_of: rebuilds the partition whose arc set is `arcs`.
// Throws OutOfRange / DuplicateEndpoint on invalid input.
SetPartition blocks_of(int n, const std::vector<Arc>& arcs);

class ColoredSetPartition {
 public:
  ColoredSetPartition() = default;
  // colors run parallel to arcs_of(p); each in [1, r].
  ColoredSetPartition(SetPartition p, std::vector<int> colors, int r);
  static ColoredSetPartition from_arcs(int n, const std::vector<ColoredArc>& arcs, int r);

  int n() const { return base_.n(); }
  int r() const { return r_; }
  const SetPartition& base() const { return base_; }
  const std::vector<int>& colors() const { return colors_; }
  std::vector<ColoredArc> colored_arcs() const;
  std::vector<int> min_set() const { return base_.min_set(); }
  std::vector<int> max_set() const { return base_.max_set(); }

  auto operator<=>(const ColoredSetPartition&) const = default;

 private:
  SetPartition base_;
  std::vector<int> colors_;
  int r_ = 1;
};

// Largest crossing/nesting chain over a single arc family (one color class).
CrossNestStats chain_stats(const std::vector<Arc>& arcs);
// Exhaustive subset oracle, for cross-validation; requires <= 20 arcs.
CrossNestStats chain_stats_subsets(const std::vector<Arc>& arcs);

// Per-color maxima: stats(colored partition) = componentwise max over colors.
CrossNestStats cr_ne(const ColoredSetPartition& cp);
CrossNestStats cr_ne(const SetPartition& p);
std::vector<CrossNestStats> cr_ne_per_color(const ColoredSetPartition& cp);

// Splits a colored partition into its r color classes: class t keeps exactly
// the arcs of color t.  merge_colors is the inverse; it throws EndpointClash
// when two classes share a left or a right endpoint.
std::vector<SetPartition> split_colors(const ColoredSetPartition& cp);
ColoredSetPartition merge_colors(const std::vector<SetPartition>& classes);

// All partitions of [n] in restricted-growth-string order.
std::vector<SetPartition> partitions_of(int n);

struct MinMaxFilter {
  std::vector<int> min_set;
  std::vector<int> max_set;
};

// Streams all r-colored partitions of [n] (colors lexicographic within each
// partition, first arc most significant), optionally only those with the
// given block-minima and block-maxima sets.
void for_each_colored(int n, int r, const std::optional<MinMaxFilter>& filter,
                      const std::function<void(const ColoredSetPartition&)>& visit);
std::vector<ColoredSetPartition> colored_partitions_of(
    int n, int r, const std::optional<MinMaxFilter>& filter = std::nullopt);

// Number of r-colored partitions of [n] with cr < j and ne < k; an absent
// bound means unconstrained.  Brute force; throws Infeasible for n > bound
// (default 9).
BigCount count_ncn_brute(int n, int r, std::optional<int> j, std::optional<int> k,
                         const std::optional<MinMaxFilter>& filter = std::nullopt,
                         int max_n = 9);

// Histogram of (cr, ne) over colored partitions with the given minima/maxima.
using JointDistribution = std::map<std::pair<int, int>, BigCount>;
JointDistribution joint_distribution(int n, int r, const MinMaxFilter& filter);

// All histograms at once, keyed by (min-set bitmask, max-set bitmask).
// Requires n <= 20 so sets fit in a word.
std::map<std::pair<unsigned, unsigned>, JointDistribution>
joint_distribution_all(int n, int r);

}  // namespace crossnest
