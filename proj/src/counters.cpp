#include "treeopt/counters.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "treeopt/errors.hpp"

namespace treeopt {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Simple paths from `start` through vertices > start; each closed path of
// length >= 3 is a cycle traversed in one of two directions.
void extend_paths(const Graph& g, int start, int current, std::uint64_t used, int length,
                  int max_len, std::vector<std::uint64_t>& counts) {
  const std::uint64_t higher = g.vertex_mask() & ~(bit(start + 1) - 1);
  if (length >= 3 && g.has_edge(current, start)) ++counts[length];
  if (length == max_len) return;
  for (std::uint64_t next = g.row(current) & higher & ~used; next; next &= next - 1) {
    const int v = std::countr_zero(next);
    extend_paths(g, start, v, used | bit(v), length + 1, max_len, counts);
  }
}

}  // namespace

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  for (int i = 0; i < g.order(); ++i) {
    const std::uint64_t above_i = g.row(i) & ~(bit(i + 1) - 1);
    for (std::uint64_t r = above_i; r; r &= r - 1) {
      const int j = std::countr_zero(r);
      total += std::popcount(g.row(j) & above_i & ~(bit(j + 1) - 1));
    }
  }
  return total;
}

std::uint64_t count_induced_p3(const Graph& g) {
  std::uint64_t wedges = 0;
  for (int i = 0; i < g.order(); ++i) {
    const std::uint64_t d = g.degree(i);
    if (d >= 2) wedges += d * (d - 1) / 2;
  }
  return wedges - 3 * count_triangles(g);
}

CycleCensus girth_and_cycles(const Graph& g, int max_len) {
  if (max_len < 1 || max_len > g.order()) {
    throw ArgumentError("max_len must lie in 1..n");
  }
  CycleCensus census;
  census.counts.assign(max_len + 1, 0);
  for (int s = 0; s < g.order(); ++s) extend_paths(g, s, s, bit(s), 1, max_len, census.counts);
  for (auto& c : census.counts) c /= 2;
  census.girth = girth(g);
  return census;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (std::uint64_t r = g.row(u); r; r &= r - 1) {
        const int v = std::countr_zero(r);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t unseen = g.vertex_mask();
  while (unseen) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t fresh = g.row(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_clique_union(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    // Closed neighbourhoods coincide along every edge iff components are cliques.
    const std::uint64_t closed = g.row(v) | bit(v);
    for (std::uint64_t r = g.row(v); r; r &= r - 1) {
      const int u = std::countr_zero(r);
      if ((g.row(u) | bit(u)) != closed) return false;
    }
  }
  return true;
}

}  // namespace treeopt
