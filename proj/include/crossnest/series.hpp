#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crossnest/counting.hpp"
#include "crossnest/partition.hpp"
#include "crossnest/poly.hpp"

namespace crossnest {

// num/den with integer coefficients, no common factor, den(0) = 1.
struct RationalGF {
  IntPoly num, den;
  bool operator==(const RationalGF&) const = default;
};

// Ordinary generating function of the walk counts indexed from n = 0,
// where the n-th term is the number of closed (n-1)-step walks at the
// zero matrix and the n = 0 term is 1.
RationalGF gf_from_graph(const StepMultigraph& g);

std::vector<BigCount> expand_gf(const RationalGF& f, int N);  // coefficients 0..N

// Laurent polynomials in two variables x, y: (a, b) -> coefficient of x^a y^b.
using LaurentPoly2 = std::map<std::pair<int, int>, BigCount>;

LaurentPoly2 six_steps();          // x + 1/x + y + 1/y + x/y + y/x
LaurentPoly2 alternating_kernel(); // 1 - x^2/y + x^3 - x^2 y^2 + y^3 - y^2/x

// Constant terms of K * (six_steps + shift)^n for n = 0..N, where K is the
// alternating kernel.  Monomials that can no longer reach the origin within
// the remaining factors are dropped as the power is built up.
std::vector<BigCount> kernel_ct_sequence(long shift, int N);

// Constant term of x^i y^j (six_steps + shift)^n.
BigCount power_ct(long shift, int i, int j, int n);

// Constant term of f * s^n for arbitrary Laurent polynomials.
BigCount ct_power_product(const LaurentPoly2& f, const LaurentPoly2& s, int n);

// sum_m binom(n,m) binom(n-m, n-j-2m) binom(2n-j-2m, n-i-j-m)
BigCount triple_binomial_sum(int i, int j, int n);

std::vector<BigCount> c2_sequence_ct(int N);  // two-colored noncrossing counts, n = 0..N
std::vector<BigCount> b_sequence_ct(int N);   // constant terms at shift 2, n = 0..N
std::vector<BigCount> q_origin_ct(int N);     // quarter-plane returns via the kernel, n = 0..N

// sum_i P[i](n) * a(n+i) = 0 for all applicable n
struct Recurrence {
  std::vector<IntPoly> P;
  bool operator==(const Recurrence&) const = default;
};

// seq[t] is a(offset + t); checks every window the sequence covers.
bool verify_recurrence(const std::vector<BigCount>& seq, const Recurrence& rec, int offset = 0);

// Smallest (order, degree) in lexicographic order admitting a polynomial
// recurrence that annihilates the whole sequence; the kernel vector is
// normalized to primitive integers with a positive leading coefficient on
// the top-order polynomial.
std::optional<Recurrence> fit_p_recurrence(const std::vector<BigCount>& seq, int max_order,
                                           int max_degree);

// Counts of r-colored partitions of [n] avoiding j-crossings and k-nestings,
// as a polynomial in r, by inclusion-exclusion over minimal offending arc
// subsets.  Either bound may be absent.  Exhaustive over partitions of [n].
IntPoly ncn_poly_in_r(int n, std::optional<int> j, std::optional<int> k,
                      const std::optional<MinMaxFilter>& filter = std::nullopt);

// Checks that the count of avoiders on [n+1] equals the binomial transform of
// the enhanced avoider counts, for the same bounds j, k and color count r.
bool enhanced_binomial_check(int n, int r, int j, int k);

}  // namespace crossnest
