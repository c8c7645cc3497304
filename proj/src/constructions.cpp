#include "treeopt/constructions.hpp"

#include <bit>
#include <string>
#include <vector>

#include "treeopt/errors.hpp"

namespace treeopt {

namespace {

void check_combined_order(int n) {
  if (n > Graph::kMaxVertices) {
    throw UnsupportedSize("construction would have " + std::to_string(n) + " vertices (max 62)");
  }
}

}  // namespace

Graph complete_graph(int n) {
  Graph e(n);
  std::vector<std::uint64_t> rows(n, e.vertex_mask());
  for (int i = 0; i < n; ++i) rows[i] &= ~(std::uint64_t{1} << i);
  return Graph::from_rows(std::move(rows));
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw ArgumentError("permutation size mismatch");
  std::vector<std::uint64_t> rows(n, 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t r = 0;
    for (std::uint64_t x = g.row(v); x; x &= x - 1) r |= std::uint64_t{1} << perm[std::countr_zero(x)];
    rows[perm[v]] = r;
  }
  return Graph::from_rows(std::move(rows));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t mask = g.vertex_mask();
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = ~g.row(i) & mask & ~(std::uint64_t{1} << i);
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  check_combined_order(a + h.order());
  std::vector<std::uint64_t> rows(a + h.order());
  for (int i = 0; i < a; ++i) rows[i] = g.row(i);
  for (int i = 0; i < h.order(); ++i) rows[a + i] = h.row(i) << a;
  return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  check_combined_order(a + b);
  const std::uint64_t left = g.vertex_mask();
  const std::uint64_t right = h.vertex_mask() << a;
  std::vector<std::uint64_t> rows(a + b);
  for (int i = 0; i < a; ++i) rows[i] = g.row(i) | right;
  for (int i = 0; i < b; ++i) rows[a + i] = (h.row(i) << a) | left;
  return Graph::from_rows(std::move(rows));
}

Graph join_power(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("join power needs k >= 1");
  check_combined_order(k * g.order());
  Graph out = g;
  for (int i = 1; i < k; ++i) out = join(out, g);
  return out;
}

Graph extend_g0(const Graph& g0, int d, int p, int q) {
  if (d < 1) throw ArgumentError("extend_g0 needs d >= 1");
  if (p < 0 || q < 0) throw ArgumentError("extend_g0 needs p, q >= 0");
  std::string offending;
  for (int v = 0; v < g0.order(); ++v) {
    const int deg = g0.degree(v);
    if (deg != d && deg != d - 1) {
      offending += (offending.empty() ? "" : ", ") + std::to_string(v) + " (degree " +
                   std::to_string(deg) + ")";
    }
  }
  if (!offending.empty()) {
    throw ArgumentError("vertices of g0 must have degree " + std::to_string(d - 1) + " or " +
                        std::to_string(d) + "; offending: " + offending);
  }
  check_combined_order(g0.order() + p * (d + 1) + q * d);
  Graph out = g0;
  for (int i = 0; i < p; ++i) out = disjoint_union(out, complete_graph(d + 1));
  for (int i = 0; i < q; ++i) out = disjoint_union(out, complete_graph(d));
  return out;
}

Graph h_seed(int n) {
  switch (n) {
    case 5:
      return empty_graph(5);
    case 6: {
      const Edge e[] = {{0, 1}, {2, 3}, {4, 5}};
      return Graph::from_edges(6, e);
    }
    case 7:
      return cycle_graph(7);
    case 8: {
      // 8-cycle with the four long diagonals.
      GraphBuilder b(8);
      for (int i = 0; i < 8; ++i) b.add_edge(i, (i + 1) % 8);
      for (int i = 0; i < 4; ++i) b.add_edge(i, i + 4);
      return b.build();
    }
    case 9: {
      // a..i -> 0..8
      const Edge e[] = {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 5},
                        {2, 6}, {2, 7}, {2, 8}, {3, 7}, {3, 8}, {4, 7}, {4, 8}, {5, 7}, {6, 8}};
      return Graph::from_edges(9, e);
    }
    default:
      throw ArgumentError("h_seed defined for 5 <= n <= 9");
  }
}

Graph h_family(int n) {
  if (n < 5) throw ArgumentError("h_family needs n >= 5");
  check_combined_order(n);
  const int q = n / 5;
  const int rho = n % 5;
  Graph out = h_seed(5 + rho);
  for (int i = 1; i < q; ++i) out = join(out, empty_graph(5));
  return out;
}

}  // namespace treeopt
