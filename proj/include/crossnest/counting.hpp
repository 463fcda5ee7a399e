#pragma once

#include <utility>
#include <vector>

#include "crossnest/bigint.hpp"
#include "crossnest/errors.hpp"

namespace crossnest {

// Vertex of the step multigraph for bounds (j, k) with r colors: an
// r x (k-1) integer matrix with weakly decreasing rows and entries in
// [0, j-1].  Stored row major.
struct VertexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  int at(int i, int l) const { return a[static_cast<std::size_t>(i * cols + l)]; }
  int& at(int i, int l) { return a[static_cast<std::size_t>(i * cols + l)]; }

  auto operator<=>(const VertexMatrix&) const = default;
};

// Undirected multigraph on the vertex matrices.  Off-diagonal edges have
// multiplicity one and connect matrices differing by +-E_{il} or by
// E_{il} - E_{i'l'}; the loop at A has multiplicity 1 + sum_i d_i where
// d_i counts the distinct values in row i that are strictly below j-1.
struct StepMultigraph {
  int j = 0, k = 0, r = 0;
  std::vector<VertexMatrix> vertices;                    // lex sorted, zero matrix first
  std::vector<std::vector<std::pair<int, long>>> adj;    // (target, multiplicity), loops included
};

StepMultigraph build_multigraph(int j, int k, int r);

// Walk counts from the zero matrix: number of m-step walks ending at each vertex.
std::vector<BigCount> walk_vector(const StepMultigraph& g, long m);

BigCount count_closed_walks(const StepMultigraph& g, long m);

// Partitions of [n] with r-colored arcs avoiding j-crossings and k-nestings,
// counted as closed (n-1)-step walks.  Index n runs 0..N in the series form.
BigCount count_ncn_walks(int j, int k, int r, long n);
std::vector<BigCount> ncn_series(int j, int k, int r, int N);

// Noncrossing r-colored partitions via the limit walk on N^r: steps +-e_i and
// e_i - e_j plus a stay step of weight r+1, closed walks of length n-1 at the
// origin.  Closed m-walks never leave the simplex |v|_1 <= floor(m/2).
BigCount count_colored_nc(int r, long n);
std::vector<BigCount> nc_series(int r, int N);

// Six-step walks on the plane: steps (+-1,0), (0,+-1), (1,-1), (-1,1).
// w counts walks on Z^2 from the origin, q the same walks confined to N^2.
struct PlaneTables {
  int N = 0;
  std::vector<std::vector<std::vector<BigCount>>> w;  // w[n][x+N][y+N]
  std::vector<std::vector<std::vector<BigCount>>> q;  // q[n][x][y]

  const BigCount& wval(int n, int x, int y) const;
  const BigCount& qval(int n, int x, int y) const;
};

PlaneTables plane_tables(int N);

// q_n(0,0) as the signed sum of w_n over the six reflected endpoints.
bool reflection_check(const PlaneTables& t, int n);

}  // namespace crossnest
