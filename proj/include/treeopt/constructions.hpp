#pragma once

#include <span>

#include "treeopt/graph.hpp"

namespace treeopt {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

/// Result has vertex perm[v] where g had v.
Graph relabel(const Graph& g, std::span<const int> perm);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph join_power(const Graph& g, int k);

/// G0 together with p disjoint copies of K_{d+1} and q of K_d. Every vertex
/// of g0 must have degree d-1 or d.
Graph extend_g0(const Graph& g0, int d, int p, int q);

/// Trace-minimal graphs of R_{n-5}(n): H_n = H_{5+rho} joined with q-1 copies of
/// the empty graph on five vertices, n = 5q + rho.
Graph h_family(int n);

/// Seeds H_5..H_9 of the family.
Graph h_seed(int n);

}  // namespace treeopt
