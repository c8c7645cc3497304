#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "treeopt/graph.hpp"

namespace treeopt {

/// Hard cap of the refinement + backtracking canonicalizer.
inline constexpr int kCanonicalMaxVertices = 16;

/// graph6 code of the canonical relabeling: the least adjacency bit string
/// (graph6 bit order) over all labelings compatible with equitable
/// refinement of the degree partition.
struct CanonicalForm {
  std::string code;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// label[v] is the canonical position of vertex v. `colors`, when given,
/// must have one entry per vertex; classes are ordered by color value and
/// only color-preserving relabelings are considered.
std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors = {});

Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

/// True iff some automorphism of g maps u to v.
bool same_orbit(const Graph& g, int u, int v);

}  // namespace treeopt
