#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "crossnest/partition.hpp"

namespace crossnest {

struct IntegerPartition {
  std::vector<int> parts;  // weakly decreasing, positive

  int rows() const { return static_cast<int>(parts.size()); }
  int cols() const { return parts.empty() ? 0 : parts.front(); }
  int size() const;
  bool empty() const { return parts.empty(); }
  bool contains(const IntegerPartition& other) const;  // Young-diagram inclusion
  IntegerPartition conjugate() const;

  auto operator<=>(const IntegerPartition&) const = default;
};

// One shape per color.
using RPartitePartition = std::vector<IntegerPartition>;

enum class TableauClass { semi_oscillating, vacillating, oscillating };

struct TableauClasses {
  bool semi_oscillating = false;
  bool vacillating = false;
  bool oscillating = false;
};

// A sequence of r-partite shapes, empty at both ends, each step changing at
// most one box in one component.  steps.size() == length + 1.
struct RPartiteTableau {
  int r = 1;
  std::vector<RPartitePartition> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }
  // Flattened part lists with separators; total order for golden output.
  std::vector<int> flatten_key() const;

  bool operator==(const RPartiteTableau&) const = default;
  bool operator<(const RPartiteTableau& o) const { return flatten_key() < o.flatten_key(); }
};

// Shape of the insertion tableau under Schensted row insertion; letters must
// be distinct positive integers.
IntegerPartition rsk_shape(const std::vector<int>& word);

// The arc-encoding bijection: an r-colored partition of [n] becomes a
// vacillating tableau of length 2n.  Component t at position k is the shape
// of the subword of a^t (arc right endpoints at even slots) restricted to
// letters larger than (k+1)/2.
RPartiteTableau to_vacillating(const ColoredSetPartition& cp);

// (max columns, max rows) over all steps and components; equals (cr, ne) of
// the partition mapped through to_vacillating.
std::pair<int, int> tableau_stats(const RPartiteTableau& t);

// Which classes the step sequence belongs to; throws NotATableau when a step
// changes more than one box or the endpoints are nonempty.
TableauClasses classify(const RPartiteTableau& t);

// Matchings (all blocks of size <= 2) land in semi-oscillating tableaux of
// length n: the even-position subsequence of to_vacillating.  Throws
// NotAMatching on a block of size 3 or more.
RPartiteTableau matching_to_semioscillating(const ColoredSetPartition& matching);

// All tableaux of the given class and length whose components stay within
// max_rows/max_cols (absent bound = unconstrained), sorted by flatten_key.
std::vector<RPartiteTableau> enumerate_tableaux(int length, int r, TableauClass cls,
                                                std::optional<int> max_rows,
                                                std::optional<int> max_cols);

// Componentwise conjugate; swaps the roles of crossings and nestings.
RPartiteTableau transpose_tableau(const RPartiteTableau& t);

// Inverse of to_vacillating by exhaustive search over colored partitions.
std::optional<ColoredSetPartition> invert_vacillating(const RPartiteTableau& t);

// f(d) = number of diagram cells on diagonal d (cell (a, b) lies on b - a).
std::map<int, int> diagonal_profile(const IntegerPartition& p);

// Rebuilds the partition from a diagonal profile, validating by re-deriving
// the profile; throws InvalidProfile on unrealizable input.
IntegerPartition profile_to_partition(const std::map<int, int>& profile);

// Interleaves the r component profiles into one: the image partition mu has
// f_mu(i) = sum over components t of f_t(floor((i + t - 1) / r)).
IntegerPartition fomin_stanton(const RPartitePartition& shape, int r);

// True when la/mu is an r-cell border strip (connected, one cell per diagonal).
bool is_rimhook_addition(const IntegerPartition& mu, const IntegerPartition& la, int r);

// All partitions reachable from the empty shape by adding r-cell border
// strips, up to the given total size, sorted.
std::vector<IntegerPartition> rimhook_closure(int r, int max_size);

// All integer partitions of exactly n, lexicographically descending parts.
std::vector<IntegerPartition> integer_partitions_of(int n);

// All r-tuples of partitions with total size exactly `total`.
std::vector<RPartitePartition> rpartite_partitions_of(int total, int r);

}  // namespace crossnest
