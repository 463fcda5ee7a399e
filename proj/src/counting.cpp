#include "crossnest/counting.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crossnest {

namespace {

void decreasing_rows(int len, int maxval, std::vector<int>& row,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(row.size()) == len) {
    out.push_back(row);
    return;
  }
  int hi = row.empty() ? maxval : row.back();
  for (int v = hi; v >= 0; --v) {
    row.push_back(v);
    decreasing_rows(len, maxval, row, out);
    row.pop_back();
  }
}

bool row_ok(const VertexMatrix& m, int i, int maxval) {
  for (int l = 0; l < m.cols; ++l) {
    int v = m.at(i, l);
    if (v < 0 || v > maxval) return false;
    if (l + 1 < m.cols && v < m.at(i, l + 1)) return false;
  }
  return true;
}

}  // namespace

StepMultigraph build_multigraph(int j, int k, int r) {
  if (j < 2 || k < 2) throw BoundsTooSmall("crossing and nesting bounds must be at least 2");
  if (r < 1) throw OutOfRange("color count must be at least 1");
  StepMultigraph g;
  g.j = j;
  g.k = k;
  g.r = r;
  int cols = k - 1;

  std::vector<std::vector<int>> rows;
  {
    std::vector<int> row;
    decreasing_rows(cols, j - 1, row, rows);
    std::sort(rows.begin(), rows.end());
  }
  {
    std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
    while (true) {
      VertexMatrix m;
      m.rows = r;
      m.cols = cols;
      for (int i = 0; i < r; ++i) {
        const auto& row = rows[pick[static_cast<std::size_t>(i)]];
        m.a.insert(m.a.end(), row.begin(), row.end());
      }
      g.vertices.push_back(std::move(m));
      int i = r;
      while (i > 0 && pick[static_cast<std::size_t>(i - 1)] == rows.size() - 1)
        pick[static_cast<std::size_t>(--i)] = 0;
      if (i == 0) break;
      ++pick[static_cast<std::size_t>(i - 1)];
    }
  }
  std::sort(g.vertices.begin(), g.vertices.end());

  std::map<std::vector<int>, int> index;
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    index[g.vertices[u].a] = static_cast<int>(u);

  g.adj.resize(g.vertices.size());
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    const VertexMatrix& m = g.vertices[u];
    auto try_edge = [&](VertexMatrix cand) {
      auto it = index.find(cand.a);
      if (it != index.end()) g.adj[u].push_back({it->second, 1});
    };
    for (int i = 0; i < r; ++i) {
      for (int l = 0; l < cols; ++l) {
        for (int d : {+1, -1}) {
          VertexMatrix cand = m;
          cand.at(i, l) += d;
          if (row_ok(cand, i, j - 1)) try_edge(std::move(cand));
        }
        for (int i2 = 0; i2 < r; ++i2) {
          for (int l2 = 0; l2 < cols; ++l2) {
            if (i2 == i && l2 == l) continue;
            VertexMatrix cand = m;
            cand.at(i, l) += 1;
            cand.at(i2, l2) -= 1;
            if (row_ok(cand, i, j - 1) && row_ok(cand, i2, j - 1)) try_edge(std::move(cand));
          }
        }
      }
    }
    long loop = 1;
    for (int i = 0; i < r; ++i) {
      std::set<int> vals;
      for (int l = 0; l < cols; ++l)
        if (m.at(i, l) < j - 1) vals.insert(m.at(i, l));
      loop += static_cast<long>(vals.size());
    }
    g.adj[u].push_back({static_cast<int>(u), loop});
  }
  return g;
}

std::vector<BigCount> walk_vector(const StepMultigraph& g, long m) {
  std::vector<BigCount> cur(g.vertices.size(), 0);
  cur[0] = 1;
  std::vector<BigCount> next(g.vertices.size());
  for (long t = 0; t < m; ++t) {
    for (auto& x : next) x = 0;
    for (std::size_t u = 0; u < cur.size(); ++u) {
      if (cur[u] == 0) continue;
      for (const auto& [v, mult] : g.adj[u])
        next[static_cast<std::size_t>(v)] += cur[u] * mult;
    }
    cur.swap(next);
  }
  return cur;
}

BigCount count_closed_walks(const StepMultigraph& g, long m) { return walk_vector(g, m)[0]; }

BigCount count_ncn_walks(int j, int k, int r, long n) {
  if (n < 0) throw OutOfRange("ground set size must be nonnegative");
  if (n == 0) return 1;
  return count_closed_walks(build_multigraph(j, k, r), n - 1);
}

std::vector<BigCount> ncn_series(int j, int k, int r, int N) {
  if (N < 0) throw OutOfRange("series length must be nonnegative");
  std::vector<BigCount> out{1};
  if (N == 0) return out;
  StepMultigraph g = build_multigraph(j, k, r);
  std::vector<BigCount> cur(g.vertices.size(), 0);
  cur[0] = 1;
  std::vector<BigCount> next(g.vertices.size());
  for (int n = 1; n <= N; ++n) {
    out.push_back(cur[0]);
    if (n == N) break;
    for (auto& x : next) x = 0;
    for (std::size_t u = 0; u < cur.size(); ++u) {
      if (cur[u] == 0) continue;
      for (const auto& [v, mult] : g.adj[u])
        next[static_cast<std::size_t>(v)] += cur[u] * mult;
    }
    cur.swap(next);
  }
  return out;
}

namespace {

void simplex_points(int r, int radius, std::vector<int>& v, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(v.size()) == r) {
    out.push_back(v);
    return;
  }
  int used = 0;
  for (int x : v) used += x;
  for (int x = 0; x <= radius - used; ++x) {
    v.push_back(x);
    simplex_points(r, radius, v, out);
    v.pop_back();
  }
}

}  // namespace

std::vector<BigCount> nc_series(int r, int N) {
  if (r < 1) throw OutOfRange("color count must be at least 1");
  if (N < 0) throw OutOfRange("series length must be nonnegative");
  std::vector<BigCount> out{1};
  if (N == 0) return out;

  int radius = (N - 1) / 2;
  std::vector<std::vector<int>> pts;
  {
    std::vector<int> v;
    simplex_points(r, radius, v, pts);
  }
  std::sort(pts.begin(), pts.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t u = 0; u < pts.size(); ++u) index[pts[u]] = static_cast<int>(u);
  int origin = index.at(std::vector<int>(static_cast<std::size_t>(r), 0));

  std::vector<std::vector<int>> nbrs(pts.size());
  for (std::size_t u = 0; u < pts.size(); ++u) {
    auto push = [&](const std::vector<int>& w) {
      auto it = index.find(w);
      if (it != index.end()) nbrs[u].push_back(it->second);
    };
    for (int i = 0; i < r; ++i) {
      std::vector<int> w = pts[u];
      ++w[static_cast<std::size_t>(i)];
      push(w);
      if (pts[u][static_cast<std::size_t>(i)] > 0) {
        w = pts[u];
        --w[static_cast<std::size_t>(i)];
        push(w);
        for (int i2 = 0; i2 < r; ++i2) {
          if (i2 == i) continue;
          w = pts[u];
          --w[static_cast<std::size_t>(i)];
          ++w[static_cast<std::size_t>(i2)];
          push(w);
        }
      }
    }
  }

  std::vector<BigCount> cur(pts.size(), 0);
  cur[static_cast<std::size_t>(origin)] = 1;
  std::vector<BigCount> next(pts.size());
  for (int n = 1; n <= N; ++n) {
    out.push_back(cur[static_cast<std::size_t>(origin)]);
    if (n == N) break;
    for (std::size_t u = 0; u < pts.size(); ++u) next[u] = cur[u] * (r + 1);
    for (std::size_t u = 0; u < pts.size(); ++u) {
      if (cur[u] == 0) continue;
      for (int v : nbrs[u]) next[static_cast<std::size_t>(v)] += cur[u];
    }
    cur.swap(next);
  }
  return out;
}

BigCount count_colored_nc(int r, long n) {
  if (n < 0) throw OutOfRange("ground set size must be nonnegative");
  return nc_series(r, static_cast<int>(n)).back();
}

namespace {
const BigCount kZero = 0;
}

const BigCount& PlaneTables::wval(int n, int x, int y) const {
  if (n < 0 || n > N || x < -N || x > N || y < -N || y > N) return kZero;
  auto idx = [&](int c) { return static_cast<std::size_t>(c + N); };
  return w[static_cast<std::size_t>(n)][idx(x)][idx(y)];
}

const BigCount& PlaneTables::qval(int n, int x, int y) const {
  if (n < 0 || n > N || x < 0 || x > N || y < 0 || y > N) return kZero;
  return q[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

PlaneTables plane_tables(int N) {
  if (N < 0) throw OutOfRange("table size must be nonnegative");
  static const int steps[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  PlaneTables t;
  t.N = N;
  std::size_t side = static_cast<std::size_t>(2 * N + 1);
  t.w.assign(static_cast<std::size_t>(N) + 1,
             std::vector<std::vector<BigCount>>(side, std::vector<BigCount>(side, 0)));
  t.q.assign(static_cast<std::size_t>(N) + 1,
             std::vector<std::vector<BigCount>>(static_cast<std::size_t>(N) + 1,
                                                std::vector<BigCount>(static_cast<std::size_t>(N) + 1, 0)));
  t.w[0][static_cast<std::size_t>(N)][static_cast<std::size_t>(N)] = 1;
  t.q[0][0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    for (int x = -N; x <= N; ++x) {
      for (int y = -N; y <= N; ++y) {
        const BigCount& c = t.wval(n - 1, x, y);
        if (c == 0) continue;
        for (const auto& s : steps) {
          int nx = x + s[0], ny = y + s[1];
          if (nx < -N || nx > N || ny < -N || ny > N) continue;
          t.w[static_cast<std::size_t>(n)][static_cast<std::size_t>(nx + N)]
             [static_cast<std::size_t>(ny + N)] += c;
        }
      }
    }
    for (int x = 0; x <= N; ++x) {
      for (int y = 0; y <= N; ++y) {
        const BigCount& c = t.qval(n - 1, x, y);
        if (c == 0) continue;
        for (const auto& s : steps) {
          int nx = x + s[0], ny = y + s[1];
          if (nx < 0 || nx > N || ny < 0 || ny > N) continue;
          t.q[static_cast<std::size_t>(n)][static_cast<std::size_t>(nx)]
             [static_cast<std::size_t>(ny)] += c;
        }
      }
    }
  }
  return t;
}

bool reflection_check(const PlaneTables& t, int n) {
  if (n < 0 || n > t.N) throw OutOfRange("walk length outside the table");
  BigCount rhs = t.wval(n, 0, 0) - t.wval(n, -2, 1) + t.wval(n, -3, 0) - t.wval(n, -2, -2) +
                 t.wval(n, 0, -3) - t.wval(n, 1, -2);
  return t.qval(n, 0, 0) == rhs;
}

}  // namespace crossnest
