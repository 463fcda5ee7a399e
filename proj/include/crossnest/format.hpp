#pragma once

#include <string>
#include <vector>

#include "crossnest/partition.hpp"
#include "crossnest/poly.hpp"
#include "crossnest/series.hpp"
#include "crossnest/tableaux.hpp"
#include "crossnest/variants.hpp"

namespace crossnest {

// Colored partition: `n=8; arcs=1-4:1,2-6:2,...` with arcs sorted by left
// endpoint.  Colors are omitted when r = 1; an `r=<r>; ` prefix appears only
// when r exceeds the largest used color (and is accepted anywhere on input).
std::string print_partition(const ColoredSetPartition& cp);
ColoredSetPartition parse_partition(const std::string& text);

// JSON twin: {"n":8,"r":2,"arcs":[[1,4,1],...]}.
std::string partition_json(const ColoredSetPartition& cp);
ColoredSetPartition parse_partition_json(const std::string& text);

// Tableau: steps joined by `;`, components by `|`, parts by `,`.
std::string print_tableau(const RPartiteTableau& t);
RPartiteTableau parse_tableau(const std::string& text);

// `num=[1,-6,7]; den=[1,-7,11,-1]`
std::string print_gf(const RationalGF& f);
RationalGF parse_gf(const std::string& text);

// `1 + 5r + 7r^2 + r^3`
std::string print_poly(const IntPoly& p, char var);

// `P_0=[0,27,9]; P_1=[-60,-52,-10]; P_2=[20,9,1]` (ascending powers of n)
std::string print_recurrence(const Recurrence& rec);
Recurrence parse_recurrence(const std::string& text);

std::string print_series(const std::vector<BigCount>& seq);

// Enhanced partition: partition format with loops `i-i:c` present at exactly
// the isolated points.
std::string print_enhanced(const EnhancedColoredPartition& e);
EnhancedColoredPartition parse_enhanced(const std::string& text);

// `sigma=2,1; upper=1; lower=2` (word, then colors of the weak-exceedance
// arcs by position, then colors of the descent arcs by left endpoint).
std::string print_permutation(const ColoredPermutation& s);
ColoredPermutation parse_permutation(const std::string& text);

// Tangled diagram: partition format over vertices, with a tick marking the
// non-default slot: `2'-5` departs the first copy of 2, `1-3'` lands on the
// second copy of 3.  Untick keeps the default (depart second, land first).
// Loops `i-i:c` never carry ticks.
std::string print_tangled(const TangledDiagram& t);
TangledDiagram parse_tangled(const std::string& text);

}  // namespace crossnest
