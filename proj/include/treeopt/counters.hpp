#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeopt/graph.hpp"

namespace treeopt {

std::uint64_t count_triangles(const Graph& g);

/// Induced paths on three vertices: sum_i C(d_i, 2) - 3 * triangles.
std::uint64_t count_induced_p3(const Graph& g);

struct CycleCensus {
  std::optional<int> girth;  ///< nullopt for forests
  /// counts[i] = number of cycle subgraphs with exactly i vertices;
  /// indices 0..2 are always zero. Size max_len + 1.
  std::vector<std::uint64_t> counts;

  std::uint64_t cycles(int len) const {
    return len >= 0 && len < static_cast<int>(counts.size()) ? counts[len] : 0;
  }
};

CycleCensus girth_and_cycles(const Graph& g, int max_len);

/// Girth alone (BFS based, independent of cycle enumeration).
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::uint64_t> components(const Graph& g);

/// True iff every connected component is a complete graph.
bool is_clique_union(const Graph& g);

}  // namespace treeopt
