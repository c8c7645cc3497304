// Independent ground truth for the test suite. Nothing here calls the
// library's canonicalizer, generator or linear algebra.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "treeopt/graph.hpp"
#include "treeopt/linalg.hpp"

namespace oracle {

using treeopt::BigInt;
using treeopt::Graph;

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) p.emplace_back(i, j);
  }
  return p;
}

inline Graph from_mask(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    if ((mask >> t) & 1U) {
      rows[pairs[t].first] |= std::uint64_t{1} << pairs[t].second;
      rows[pairs[t].second] |= std::uint64_t{1} << pairs[t].first;
    }
  }
  return Graph::from_rows(rows);
}

/// Calls fn on every labeled graph on n vertices.
inline void for_each_labeled(int n, const std::function<void(const Graph&)>& fn) {
  const auto pairs = all_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(from_mask(n, mask, pairs));
}

/// Least upper-triangle bit pattern over all n! relabelings.
inline std::uint64_t brute_key(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto pairs = all_pairs(n);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (g.has_edge(perm[pairs[t].first], perm[pairs[t].second])) key |= std::uint64_t{1} << t;
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class, by brute-force keys (n <= 6).
inline std::vector<Graph> brute_classes(int n) {
  std::map<std::uint64_t, Graph> seen;
  for_each_labeled(n, [&](const Graph& g) { seen.emplace(brute_key(g), g); });
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  return out;
}

/// Backtracking search for an adjacency-preserving bijection.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degrees();
  auto dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != h.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

/// Number of isomorphism classes of graphs with n vertices and m edges, by
/// Burnside's lemma over the induced action of S_n on vertex pairs.
inline BigInt burnside_count(int n, int m) {
  const auto pairs = all_pairs(n);
  const int np = static_cast<int>(pairs.size());
  std::vector<int> index(n * n, -1);
  for (int t = 0; t < np; ++t) index[pairs[t].first * n + pairs[t].second] = t;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt fixed_total = 0;
  BigInt group_order = 0;
  do {
    ++group_order;
    std::vector<bool> seen(np, false);
    std::vector<BigInt> poly(np + 1, 0);
    poly[0] = 1;
    for (int t = 0; t < np; ++t) {
      if (seen[t]) continue;
      int len = 0;
      for (int s = t; !seen[s]; ++len) {
        seen[s] = true;
        int a = perm[pairs[s].first];
        int b = perm[pairs[s].second];
        if (a > b) std::swap(a, b);
        s = index[a * n + b];
      }
      for (int e = np; e >= len; --e) poly[e] += poly[e - len];
    }
    if (m <= np) fixed_total += poly[m];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed_total / group_order;
}

/// Every labeled d-regular graph on n vertices, by edge-by-edge backtracking.
inline void for_each_labeled_regular(int n, int d, const std::function<void(const Graph&)>& fn) {
  const auto pairs = all_pairs(n);
  std::vector<int> deg(n, 0);
  std::vector<std::uint64_t> rows(n, 0);
  // Pairs sorted by their smaller endpoint so a vertex is final once passed.
  std::vector<std::pair<int, int>> order = pairs;
  std::sort(order.begin(), order.end());
  std::function<void(std::size_t)> go = [&](std::size_t t) {
    if (t == order.size()) {
      if (std::all_of(deg.begin(), deg.end(), [&](int x) { return x == d; })) fn(Graph::from_rows(rows));
      return;
    }
    const auto [a, b] = order[t];
    // Vertex a has no pairs left after this one when b == n - 1.
    const bool last_for_a = b == n - 1;
    if (deg[a] < d && deg[b] < d) {
      ++deg[a];
      ++deg[b];
      rows[a] |= std::uint64_t{1} << b;
      rows[b] |= std::uint64_t{1} << a;
      if (!last_for_a || deg[a] == d) go(t + 1);
      --deg[a];
      --deg[b];
      rows[a] &= ~(std::uint64_t{1} << b);
      rows[b] &= ~(std::uint64_t{1} << a);
    }
    if (!last_for_a || deg[a] == d) go(t + 1);
  };
  go(0);
}

/// Classes of a labeled family, deduplicated by brute_isomorphic.
inline std::vector<Graph> dedupe_brute(const std::vector<Graph>& labeled) {
  std::vector<Graph> reps;
  for (const Graph& g : labeled) {
    bool known = false;
    for (const Graph& r : reps) {
      if (brute_isomorphic(g, r)) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(g);
  }
  return reps;
}

inline BigInt leibniz_det(const std::vector<std::vector<BigInt>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    BigInt term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(xI - M) at integer x, via the Leibniz expansion.
inline BigInt leibniz_char_value(const treeopt::IntMatrix& m, long x) {
  const int n = m.order();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = (i == j ? BigInt(x) : BigInt(0)) - m(i, j);
  }
  return leibniz_det(a);
}

/// Counts edge subsets of size n-1 that connect every vertex.
inline std::uint64_t brute_spanning_trees(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 1;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m < n - 1) return 0;
  std::uint64_t count = 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + (n - 1), true);
  do {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!pick[e]) continue;
      const int a = find(edges[e].first);
      const int b = find(edges[e].second);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

inline std::uint64_t brute_triangles(const Graph& g) {
  std::uint64_t c = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int x = b + 1; x < n; ++x) c += g.has_edge(a, b) && g.has_edge(b, x) && g.has_edge(a, x);
    }
  }
  return c;
}

/// 3-subsets inducing exactly two edges.
inline std::uint64_t brute_induced_p3(const Graph& g) {
  std::uint64_t c = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int x = b + 1; x < n; ++x) c += (g.has_edge(a, b) + g.has_edge(b, x) + g.has_edge(a, x)) == 2;
    }
  }
  return c;
}

/// Cycles on exactly len vertices, each counted once: enumerate vertex
/// sequences starting at their minimum with second < last.
inline std::uint64_t brute_cycles(const Graph& g, int len) {
  const int n = g.order();
  std::uint64_t count = 0;
  std::vector<int> seq;
  std::vector<bool> on(n, false);
  std::function<void()> walk = [&]() {
    if (static_cast<int>(seq.size()) == len) {
      if (g.has_edge(seq.back(), seq.front()) && seq[1] < seq.back()) ++count;
      return;
    }
    for (int w = seq.front() + 1; w < n; ++w) {
      if (on[w] || !g.has_edge(seq.back(), w)) continue;
      on[w] = true;
      seq.push_back(w);
      walk();
      seq.pop_back();
      on[w] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    seq = {s};
    on.assign(n, false);
    on[s] = true;
    walk();
  }
  return count;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::uint64_t> rows(n, 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng)) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(rows);
}

}  // namespace oracle
