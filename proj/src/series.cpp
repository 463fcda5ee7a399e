#include "crossnest/series.hpp"

#include <algorithm>
#include <cstdlib>

#include "crossnest/variants.hpp"

namespace crossnest {

namespace {

// Fraction-free elimination; row swaps flip the sign, a dead column means a
// zero determinant.  Intermediate entries stay minors of the input, so every
// division is exact.
IntPoly bareiss_det(std::vector<std::vector<IntPoly>> M) {
  std::size_t n = M.size();
  if (n == 0) return IntPoly::constant(1);
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t p = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!M[i][k].is_zero()) {
          p = i;
          break;
        }
      if (p == n) return {};
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = divexact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = {};
    }
    prev = M[k][k];
  }
  IntPoly det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

std::vector<std::vector<IntPoly>> walk_matrix(const StepMultigraph& g, bool drop_zero) {
  std::size_t n = g.vertices.size();
  std::size_t from = drop_zero ? 1 : 0;
  std::size_t dim = n - from;
  std::vector<std::vector<IntPoly>> M(dim, std::vector<IntPoly>(dim));
  for (std::size_t u = from; u < n; ++u) {
    for (std::size_t v = from; v < n; ++v)
      M[u - from][v - from] = (u == v) ? IntPoly::constant(1) : IntPoly{};
    for (const auto& [v, mult] : g.adj[u]) {
      if (static_cast<std::size_t>(v) < from) continue;
      M[u - from][static_cast<std::size_t>(v) - from] =
          M[u - from][static_cast<std::size_t>(v) - from] - IntPoly::monomial(mult, 1);
    }
  }
  return M;
}

}  // namespace

RationalGF gf_from_graph(const StepMultigraph& g) {
  IntPoly den_raw = bareiss_det(walk_matrix(g, false));
  IntPoly minor = bareiss_det(walk_matrix(g, true));
  IntPoly num_raw = den_raw + IntPoly::monomial(1, 1) * minor;
  IntPoly common = poly_gcd(num_raw, den_raw);
  IntPoly num = divexact(num_raw, common);
  IntPoly den = divexact(den_raw, common);
  if (den.coeff(0) < 0) {
    num = -num;
    den = -den;
  }
  if (den.coeff(0) != 1) throw Error("walk series denominator lost its unit constant term");
  return {std::move(num), std::move(den)};
}

std::vector<BigCount> expand_gf(const RationalGF& f, int N) {
  if (N < 0) throw OutOfRange("series length must be nonnegative");
  std::vector<BigCount> a;
  a.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    BigCount v = f.num.coeff(n);
    for (int i = 1; i <= f.den.degree() && i <= n; ++i)
      v -= f.den.coeff(i) * a[static_cast<std::size_t>(n - i)];
    a.push_back(std::move(v));
  }
  return a;
}

LaurentPoly2 six_steps() {
  return {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}};
}

LaurentPoly2 alternating_kernel() {
  return {{{0, 0}, 1}, {{2, -1}, -1}, {{3, 0}, 1}, {{2, 2}, -1}, {{0, 3}, 1}, {{-1, 2}, -1}};
}

namespace {

const BigCount& lp_coeff(const LaurentPoly2& p, int a, int b) {
  static const BigCount zero = 0;
  auto it = p.find({a, b});
  return it == p.end() ? zero : it->second;
}

// product with monomials beyond the reach window |a - cx| + |b - cy| <= lim dropped
LaurentPoly2 mul_clip(const LaurentPoly2& p, const LaurentPoly2& q, int cx, int cy, long lim) {
  LaurentPoly2 out;
  for (const auto& [mp, cp] : p) {
    if (cp == 0) continue;
    for (const auto& [mq, cq] : q) {
      int a = mp.first + mq.first, b = mp.second + mq.second;
      if (std::abs(a - cx) + std::abs(b - cy) > lim) continue;
      out[{a, b}] += cp * cq;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::vector<BigCount> kernel_ct_sequence(long shift, int N) {
  if (N < 0) throw OutOfRange("series length must be nonnegative");
  LaurentPoly2 step = six_steps();
  if (shift != 0) step[{0, 0}] += shift;
  LaurentPoly2 cur = alternating_kernel();
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int t = 0;; ++t) {
    out.push_back(lp_coeff(cur, 0, 0));
    if (t == N) break;
    // each remaining factor moves the exponent by at most 2 in the 1-norm
    cur = mul_clip(cur, step, 0, 0, 2L * (N - t - 1));
  }
  return out;
}

BigCount power_ct(long shift, int i, int j, int n) {
  if (n < 0) throw OutOfRange("power must be nonnegative");
  LaurentPoly2 step = six_steps();
  if (shift != 0) step[{0, 0}] += shift;
  LaurentPoly2 cur{{{0, 0}, 1}};
  for (int t = 1; t <= n; ++t) cur = mul_clip(cur, step, -i, -j, 2L * (n - t));
  return lp_coeff(cur, -i, -j);
}

BigCount ct_power_product(const LaurentPoly2& f, const LaurentPoly2& s, int n) {
  if (n < 0) throw OutOfRange("power must be nonnegative");
  long deg = 0;
  for (const auto& [m, c] : s)
    if (c != 0) deg = std::max(deg, static_cast<long>(std::abs(m.first) + std::abs(m.second)));
  LaurentPoly2 cur = f;
  for (int t = 1; t <= n; ++t) cur = mul_clip(cur, s, 0, 0, deg * (n - t));
  return lp_coeff(cur, 0, 0);
}

BigCount triple_binomial_sum(int i, int j, int n) {
  BigCount total = 0;
  for (int m = 0; m <= n; ++m)
    total += binomial(n, m) * binomial(n - m, n - j - 2 * m) *
             binomial(2 * n - j - 2 * m, n - i - j - m);
  return total;
}

std::vector<BigCount> c2_sequence_ct(int N) {
  std::vector<BigCount> out{1};
  if (N == 0) return out;
  std::vector<BigCount> tail = kernel_ct_sequence(3, N - 1);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<BigCount> b_sequence_ct(int N) { return kernel_ct_sequence(2, N); }

std::vector<BigCount> q_origin_ct(int N) { return kernel_ct_sequence(0, N); }

bool verify_recurrence(const std::vector<BigCount>& seq, const Recurrence& rec, int offset) {
  if (rec.P.empty()) throw OutOfRange("recurrence needs at least one polynomial");
  std::size_t d = rec.P.size() - 1;
  if (seq.size() < rec.P.size()) throw SequenceTooShort("sequence shorter than the order");
  for (std::size_t t = 0; t + d < seq.size(); ++t) {
    BigCount acc = 0;
    long n = offset + static_cast<long>(t);
    for (std::size_t i = 0; i <= d; ++i) acc += rec.P[i].eval(n) * seq[t + i];
    if (acc != 0) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> M,
                                                std::size_t cols) {
  std::size_t rows = M.size();
  std::vector<long> pivot_in_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        p = i;
        break;
      }
    if (p == rows) continue;
    std::swap(M[r], M[p]);
    Rational lead = M[r][c];
    for (std::size_t t = c; t < cols; ++t) M[r][t] /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t t = c; t < cols; ++t) M[i][t] -= f * M[r][t];
    }
    pivot_in_col[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_in_col[f] >= 0) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_in_col[c] >= 0) v[c] = -M[static_cast<std::size_t>(pivot_in_col[c])][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigCount> to_primitive_integers(const std::vector<Rational>& v) {
  BigCount lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<BigCount> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rational scaled = x * Rational(lcm);
    out.push_back(scaled.get_num());
  }
  BigCount g = 0;
  for (const auto& x : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace

std::optional<Recurrence> fit_p_recurrence(const std::vector<BigCount>& seq, int max_order,
                                           int max_degree) {
  if (max_order < 1 || max_degree < 0) throw OutOfRange("bad search bounds");
  long need = static_cast<long>(max_order + 1) * (max_degree + 1) + max_order;
  if (static_cast<long>(seq.size()) <= need)
    throw InsufficientData("sequence too short for the requested search bounds");

  for (int d = 1; d <= max_order; ++d) {
    for (int e = 0; e <= max_degree; ++e) {
      std::size_t cols = static_cast<std::size_t>((d + 1) * (e + 1));
      std::size_t rows = seq.size() - static_cast<std::size_t>(d);
      std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols, 0));
      for (std::size_t n = 0; n < rows; ++n) {
        BigCount npow = 1;
        for (int t = 0; t <= e; ++t) {
          for (int i = 0; i <= d; ++i)
            M[n][static_cast<std::size_t>(i * (e + 1) + t)] =
                Rational(npow * seq[n + static_cast<std::size_t>(i)]);
          npow *= static_cast<long>(n);
        }
      }

      std::vector<Recurrence> candidates;
      std::vector<std::vector<BigCount>> flats;
      for (const auto& kv : kernel_basis(std::move(M), cols)) {
        std::vector<BigCount> w = to_primitive_integers(kv);
        Recurrence rec;
        for (int i = 0; i <= d; ++i) {
          std::vector<BigCount> coeffs(w.begin() + i * (e + 1), w.begin() + (i + 1) * (e + 1));
          rec.P.emplace_back(std::move(coeffs));
        }
        if (rec.P.back().is_zero()) continue;
        if (rec.P.back().c.back() < 0) {
          for (auto& p : rec.P)
            for (auto& x : p.c) x = -x;
          for (auto& x : w) x = -x;
        }
        candidates.push_back(std::move(rec));
        flats.push_back(std::move(w));
      }
      if (candidates.empty()) continue;

      std::size_t best = 0;
      auto max_abs = [](const std::vector<BigCount>& w) {
        BigCount m = 0;
        for (const auto& x : w) {
          BigCount a = abs(x);
          if (a > m) m = a;
        }
        return m;
      };
      for (std::size_t i = 1; i < candidates.size(); ++i) {
        BigCount mi = max_abs(flats[i]), mb = max_abs(flats[best]);
        if (mi < mb || (mi == mb && flats[i] < flats[best])) best = i;
      }
      if (!verify_recurrence(seq, candidates[best])) continue;
      return candidates[best];
    }
  }
  return std::nullopt;
}

namespace {

// exponent -> coefficient, exponents may be negative while clusters multiply
using RLaurent = std::map<int, BigCount>;

RLaurent rl_mul(const RLaurent& a, const RLaurent& b) {
  RLaurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

void cluster_terms(const std::vector<unsigned>& evs, std::size_t idx, int parity,
                   std::vector<unsigned>& comps, unsigned used, RLaurent& terms) {
  if (idx == evs.size()) {
    int exponent = static_cast<int>(comps.size()) - __builtin_popcount(used);
    terms[exponent] += parity;
    return;
  }
  cluster_terms(evs, idx + 1, parity, comps, used, terms);
  unsigned merged = evs[idx];
  std::vector<unsigned> next;
  for (unsigned c : comps) {
    if (c & evs[idx]) merged |= c;
    else next.push_back(c);
  }
  next.push_back(merged);
  cluster_terms(evs, idx + 1, -parity, next, used | evs[idx], terms);
}

void offending_subsets(const std::vector<Arc>& arcs, int size, bool crossing,
                       std::vector<unsigned>& out) {
  int m = static_cast<int>(arcs.size());
  if (size > m) return;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    bool ok = true;
    for (int t = 1; t < size && ok; ++t) {
      int prev = arcs[static_cast<std::size_t>(pick[static_cast<std::size_t>(t - 1)])].right;
      int cur = arcs[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])].right;
      ok = crossing ? prev < cur : prev > cur;
    }
    if (ok && crossing && size >= 2)
      ok = arcs[static_cast<std::size_t>(pick.back())].left <
           arcs[static_cast<std::size_t>(pick.front())].right;
    if (ok) {
      unsigned mask = 0;
      for (int x : pick) mask |= 1u << x;
      out.push_back(mask);
    }
    int t = size - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == m - size + t) --t;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < size; ++s)
      pick[static_cast<std::size_t>(s)] = pick[static_cast<std::size_t>(s - 1)] + 1;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

IntPoly ncn_poly_in_r(int n, std::optional<int> j, std::optional<int> k,
                      const std::optional<MinMaxFilter>& filter) {
  if (n < 0) throw OutOfRange("ground set size must be nonnegative");
  if (n > 9) throw Infeasible("exhaustive expansion limited to n <= 9");
  if (j && *j < 2) throw BoundsTooSmall("crossing bound must be at least 2");
  if (k && *k < 2) throw BoundsTooSmall("nesting bound must be at least 2");

  IntPoly result;
  for (const SetPartition& p : partitions_of(n)) {
    if (filter && (p.min_set() != filter->min_set || p.max_set() != filter->max_set)) continue;
    std::vector<Arc> arcs = arcs_of(p);
    int m = static_cast<int>(arcs.size());

    std::vector<unsigned> events;
    if (j) offending_subsets(arcs, *j, true, events);
    if (k) offending_subsets(arcs, *k, false, events);

    RLaurent total{{0, 1}};
    if (!events.empty()) {
      UnionFind uf(m);
      for (unsigned ev : events) {
        int first = __builtin_ctz(ev);
        for (int a = first + 1; a < m; ++a)
          if (ev & (1u << a)) uf.unite(first, a);
      }
      std::map<int, std::vector<unsigned>> clusters;
      for (unsigned ev : events) clusters[uf.find(__builtin_ctz(ev))].push_back(ev);
      for (const auto& [root, evs] : clusters) {
        RLaurent terms;
        std::vector<unsigned> comps;
        cluster_terms(evs, 0, 1, comps, 0, terms);
        total = rl_mul(total, terms);
      }
    }
    for (const auto& [exp, coeff] : total) {
      int deg = m + exp;
      if (deg < 0) throw Error("negative color exponent in the expansion");
      result = result + IntPoly::monomial(coeff, deg);
    }
  }
  return result;
}

bool enhanced_binomial_check(int n, int r, int j, int k) {
  BigCount lhs = count_ncn_brute(n + 1, r, j, k);
  BigCount rhs = 0;
  for (int i = 0; i <= n; ++i) {
    BigCount avoiders = 0;
    for (const auto& e : enumerate_enhanced(i, r)) {
      auto [cr, ne] = enhanced_stats(e);
      if (cr < j && ne < k) ++avoiders;
    }
    rhs += binomial(n, i) * avoiders;
  }
  return lhs == rhs;
}

}  // namespace crossnest
