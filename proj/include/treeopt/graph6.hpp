#pragma once

#include <string>
#include <string_view>

#include "treeopt/graph.hpp"

namespace treeopt {

/// graph6 short form (1 <= n <= 62), bit-exact, no canonicalization.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Plain text "n m" header followed by m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace treeopt
