#pragma once

#include <functional>
#include <string>
#include <vector>

namespace crossnest::checks {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

// Each check is self-contained and exact; parameters default to the scale the
// acceptance suite runs at.  Details name the first mismatch on failure.

// Two-colored noncrossing counts from the lattice walk match the pinned
// decimal values for n = 0..9.
CheckResult c2_sequence();

// Exhaustive enumeration, lattice walk, and constant-term extraction agree on
// the two-colored noncrossing counts (enumeration up to n_brute).
CheckResult c2_triple(int n_brute = 8, int n_full = 12);

// The three-term and four-term polynomial recurrences annihilate the
// two-colored noncrossing sequence through the given indices.
CheckResult c2_recurrence(int n3 = 100, int n4 = 50);

// One-colored partitions avoiding both 2-crossings and 2-nestings: the walk
// counts and the enumeration both give the odd-indexed Fibonacci numbers.
CheckResult fib_walks(int N = 7);

// Transfer-matrix generating functions at (j,k,r) = (2,2,1) and (2,2,2)
// equal their pinned closed forms and expand back to the walk counts.
CheckResult gf_golden();

// Noncrossing counts as polynomials in the number of colors: pinned rows of
// the table, monic of degree n-1, and evaluations match enumeration.
CheckResult poly_table(int n_table = 8, int n_brute = 7);

// The joint (crossing, nesting) histogram is symmetric for every prescribed
// pair of minima and maxima sets.
CheckResult symmetry(int n_max = 6, int r_max = 2);

// Arc encoding to vacillating tableaux: statistics carry over, the inverse
// recovers the partition, counts agree, and the worked example reproduces its
// printed form byte for byte.
CheckResult bijection(int n_max = 5, int r_max = 2);

// Componentwise conjugation is an involution on vacillating tableaux that
// swaps the two statistics.
CheckResult transpose(int n_max = 5, int r_max = 2);

// The diagonal-interleaving map sends shape tuples bijectively onto the
// border-strip closure, multiplying sizes by r and satisfying the ceiling
// law for rows and columns.
CheckResult rimhook(int max_size = 5);

// Variant structures: doubled partitions, enhanced partitions, permutation
// matching pairs, tangled diagrams, noncrossing permutation counts, and the
// binomial transform relating enhanced to ordinary avoiders.
CheckResult variants(int n_max = 4, int perm_n_max = 3, int r_max = 2, int catalan_n = 7,
                     int binom_n = 5);

// Quarter-plane reflection identity, the second-order recurrence for the
// shift-2 constant terms, and the two binomial transforms onto the
// two-colored noncrossing sequence.
CheckResult reflection(int n_reflect = 30, int n_brec = 50, int n_transform = 20);

// The recurrence fitter rediscovers the Catalan and two-colored recurrences
// from raw terms and finds nothing for three colors at small order/degree.
CheckResult fit_rediscovery();

// Growth-rate estimation is out of scope; records that nothing here claims
// asymptotics and all arithmetic is exact.
CheckResult scope_asymptotics();

struct NamedCheck {
  std::string name;
  std::function<CheckResult()> run;  // bound to the default parameters
};

const std::vector<NamedCheck>& all_checks();

}  // namespace crossnest::checks
