#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <utility>
#include <vector>

#include "crossnest/counting.hpp"
#include "crossnest/partition.hpp"
#include "crossnest/series.hpp"

using namespace crossnest;

namespace {

IntPoly poly(std::vector<long> cs) {
  std::vector<BigCount> v(cs.begin(), cs.end());
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("integer polynomial arithmetic") {
  IntPoly a = poly({1, 1});
  IntPoly b = poly({-1, 1});
  CHECK(a * b == poly({-1, 0, 1}));
  CHECK(a + b == poly({0, 2}));
  CHECK(a - a == IntPoly{});
  CHECK((-a) == poly({-1, -1}));
  CHECK(a.eval(4) == 5);
  CHECK(poly({}).is_zero());
  CHECK(poly({0, 0}).is_zero());
  CHECK(IntPoly::monomial(3, 2) == poly({0, 0, 3}));
  CHECK(IntPoly::constant(-7) == poly({-7}));
  CHECK(poly({2, -4, 6}).content() == 2);
  CHECK(poly({-2, -4}).primitive_part() == poly({-1, -2}));
}

TEST_CASE("exact division and gcd") {
  CHECK(divexact(poly({-1, 0, 1}), poly({1, 1})) == poly({-1, 1}));
  CHECK_THROWS_AS(divexact(poly({1, 0, 1}), poly({1, 1})), Error);
  CHECK(poly_gcd(poly({-1, 0, 1}), poly({1, -2, 1})) == poly({-1, 1}));
  CHECK(poly_gcd(poly({2, 2}), poly({4, 4})) == poly({2, 2}));
  CHECK(poly_gcd(poly({}), poly({0, -3})) == poly({0, 3}));
  CHECK(poly_gcd(poly({1, 1}), poly({1})) == poly({1}));
}

TEST_CASE("rational generating functions for the bounded counts") {
  RationalGF f1 = gf_from_graph(build_multigraph(2, 2, 1));
  CHECK(f1.num == poly({1, -2}));
  CHECK(f1.den == poly({1, -3, 1}));

  RationalGF f2 = gf_from_graph(build_multigraph(2, 2, 2));
  CHECK(f2.num == poly({1, -6, 7}));
  CHECK(f2.den == poly({1, -7, 11, -1}));
}

TEST_CASE("generating function expansion") {
  RationalGF fib{poly({1}), poly({1, -1, -1})};
  CHECK(expand_gf(fib, 6) == std::vector<BigCount>{1, 1, 2, 3, 5, 8, 13});
  RationalGF geo{poly({1}), poly({1, -1})};
  CHECK(expand_gf(geo, 3) == std::vector<BigCount>{1, 1, 1, 1});
}

TEST_CASE("a single loop gives the geometric series") {
  StepMultigraph g;
  g.j = g.k = 2;
  g.r = 1;
  g.vertices = {VertexMatrix{1, 1, {0}}};
  g.adj = {{{0, 1}}};
  RationalGF f = gf_from_graph(g);
  CHECK(f.num == poly({1}));
  CHECK(f.den == poly({1, -1}));
}

TEST_CASE("expanded transfer-matrix functions reproduce the walk series") {
  for (auto [j, k, r] : std::vector<std::tuple<int, int, int>>{
           {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {3, 2, 1}, {3, 3, 2}}) {
    RationalGF f = gf_from_graph(build_multigraph(j, k, r));
    CHECK(f.den.coeff(0) == 1);
    CHECK(poly_gcd(f.num, f.den).degree() == 0);
    CHECK(expand_gf(f, 12) == ncn_series(j, k, r, 12));
  }
}

TEST_CASE("six-step constant terms") {
  LaurentPoly2 s = six_steps();
  CHECK(s.size() == 6);
  for (const auto& [m, c] : s) CHECK(c == 1);
  LaurentPoly2 one = {{{0, 0}, 1}};
  CHECK(ct_power_product(one, s, 0) == 1);
  CHECK(ct_power_product(one, s, 1) == 0);
  CHECK(ct_power_product(one, s, 2) == 6);
  CHECK(ct_power_product(one, s, 3) == 12);
  CHECK(power_ct(0, 0, 0, 2) == 6);
  CHECK(power_ct(0, 0, 0, 3) == 12);
}

TEST_CASE("the alternating kernel folds the walk into one orbit sum") {
  LaurentPoly2 f = alternating_kernel();
  CHECK(f.size() == 6);
  BigCount total = 0;
  for (const auto& [m, c] : f) {
    CHECK((c == 1 || c == -1));
    total += c;
  }
  CHECK(total == 0);
  CHECK(f.at({0, 0}) == 1);

  LaurentPoly2 shifted = six_steps();
  shifted[{0, 0}] += 3;
  auto seq = kernel_ct_sequence(3, 8);
  for (int n = 0; n <= 8; ++n)
    CHECK(ct_power_product(f, shifted, n) == seq[static_cast<std::size_t>(n)]);
}

TEST_CASE("kernel constant terms match the lattice counts") {
  CHECK(c2_sequence_ct(9) == nc_series(2, 9));
  CHECK(b_sequence_ct(2) == std::vector<BigCount>{1, 2, 6});
  CHECK(q_origin_ct(2) == std::vector<BigCount>{1, 0, 2});
  PlaneTables t = plane_tables(8);
  auto q = q_origin_ct(8);
  for (int n = 0; n <= 8; ++n) CHECK(q[static_cast<std::size_t>(n)] == t.qval(n, 0, 0));
}

TEST_CASE("triple binomial sums evaluate shifted constant terms") {
  CHECK(triple_binomial_sum(0, 0, 0) == 1);
  CHECK(triple_binomial_sum(0, 0, 1) == 2);
  CHECK(triple_binomial_sum(0, 0, 2) == 10);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int n = 0; n <= 8; ++n) CHECK(triple_binomial_sum(i, j, n) == power_ct(2, i, j, n));

  auto b = b_sequence_ct(2);
  BigCount lhs = 0;
  for (int k = 0; k <= 2; ++k) lhs += binomial(2, k) * b[static_cast<std::size_t>(k)];
  CHECK(lhs == 11);
}

TEST_CASE("recurrence verification walks every window") {
  Recurrence fib{{poly({1}), poly({1}), poly({-1})}};
  CHECK(verify_recurrence({1, 1, 2, 3, 5, 8, 13}, fib));
  CHECK_FALSE(verify_recurrence({1, 1, 2, 3, 6}, fib));

  Recurrence catalan{{poly({-2, -4}), poly({2, 1})}};
  CHECK(verify_recurrence({1, 1, 2, 5, 14, 42}, catalan));
  CHECK(verify_recurrence({2, 5, 14, 42}, catalan, 2));
  CHECK_FALSE(verify_recurrence({2, 5, 14, 42}, catalan, 0));

  CHECK_THROWS_AS(verify_recurrence({1, 2}, Recurrence{}), OutOfRange);
  CHECK_THROWS_AS(verify_recurrence({1}, fib), SequenceTooShort);
}

TEST_CASE("shifted-kernel sequence satisfies its second-order recurrence") {
  Recurrence rec{{poly({-16, -24, -8}), poly({-82, -49, -7}), poly({30, 11, 1})}};
  CHECK(verify_recurrence(b_sequence_ct(30), rec));
}

TEST_CASE("recurrence fitting recovers canonical annihilators") {
  auto pow2 = fit_p_recurrence({1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048}, 2, 2);
  REQUIRE(pow2.has_value());
  CHECK(*pow2 == Recurrence{{poly({-2}), poly({1})}});

  auto fact = fit_p_recurrence({1, 1, 2, 6, 24, 120, 720, 5040}, 1, 1);
  REQUIRE(fact.has_value());
  CHECK(*fact == Recurrence{{poly({-1, -1}), poly({1})}});

  std::vector<BigCount> cat = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
  auto c = fit_p_recurrence(cat, 1, 1);
  REQUIRE(c.has_value());
  CHECK(*c == Recurrence{{poly({-2, -4}), poly({2, 1})}});

  auto fives = fit_p_recurrence({5, 5, 5, 5, 5, 5}, 1, 0);
  REQUIRE(fives.has_value());
  CHECK(*fives == Recurrence{{poly({-1}), poly({1})}});
}

TEST_CASE("recurrence fitting refuses thin or unruly data") {
  CHECK_THROWS_AS(fit_p_recurrence({1, 2}, 2, 2), InsufficientData);
  CHECK_FALSE(fit_p_recurrence({2, 3, 5, 7, 11, 13, 17, 19}, 1, 1).has_value());
}

TEST_CASE("avoider counts as polynomials in the color count") {
  CHECK(ncn_poly_in_r(0, 2, std::nullopt) == poly({1}));
  CHECK(ncn_poly_in_r(1, 2, std::nullopt) == poly({1}));
  CHECK(ncn_poly_in_r(4, 2, std::nullopt) == poly({1, 5, 7, 1}));
  CHECK(ncn_poly_in_r(8, 2, std::nullopt) ==
        poly({1, -24, 176, 159, 225, 765, 127, 1}));
  CHECK(ncn_poly_in_r(4, 2, std::nullopt).eval(3) == 106);

  for (int n = 1; n <= 7; ++n) {
    IntPoly p = ncn_poly_in_r(n, 2, std::nullopt);
    CHECK(p.degree() == n - 1);
    CHECK(p.c.back() == 1);
  }
}

TEST_CASE("the polynomial is symmetric in the two bounds") {
  for (int n = 0; n <= 7; ++n)
    for (int j = 2; j <= 3; ++j)
      for (int k = j; k <= 3; ++k)
        CHECK(ncn_poly_in_r(n, j, k) == ncn_poly_in_r(n, k, j));
}

TEST_CASE("polynomial evaluations count avoiders") {
  for (int n = 0; n <= 6; ++n)
    for (int j = 2; j <= 3; ++j)
      for (int k = 2; k <= 3; ++k) {
        IntPoly p = ncn_poly_in_r(n, j, k);
        for (int r = 1; r <= 2; ++r) CHECK(p.eval(r) == count_ncn_brute(n, r, j, k));
      }
}

TEST_CASE("polynomial respects the minima-maxima filter") {
  MinMaxFilter f{{1, 2}, {2, 3}};
  CHECK(ncn_poly_in_r(3, std::nullopt, std::nullopt, f) == IntPoly::monomial(1, 1));
}

TEST_CASE("polynomial guards") {
  CHECK_THROWS_AS(ncn_poly_in_r(-1, 2, 2), OutOfRange);
  CHECK_THROWS_AS(ncn_poly_in_r(10, 2, 2), Infeasible);
  CHECK_THROWS_AS(ncn_poly_in_r(4, 1, 2), BoundsTooSmall);
}

TEST_CASE("bounded counts satisfy the enhanced binomial transform") {
  for (int n = 0; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r) {
      CHECK(enhanced_binomial_check(n, r, 2, 2));
      CHECK(enhanced_binomial_check(n, r, 3, 3));
    }
}
