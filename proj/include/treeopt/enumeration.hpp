#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeopt/canonical.hpp"
#include "treeopt/graph.hpp"

namespace treeopt {

struct EnumOptions {
  Caps caps{};
  int workers = 1;
};

/// Isomorphism classes of a graph class, one canonical representative each,
/// in ascending order of canonical graph6 code.
struct IsoClassStream {
  GraphClassSpec spec;
  std::vector<Graph> graphs;
  std::vector<std::string> codes;
  bool parity_warning = false;  ///< set when n*d is odd (empty regular class)

  std::size_t size() const noexcept { return graphs.size(); }
  bool empty() const noexcept { return graphs.empty(); }
};

/// All d-regular graphs on n vertices up to isomorphism. Odd n*d yields an
/// empty stream with parity_warning set.
IsoClassStream enumerate_regular(int n, int d, const EnumOptions& opts = {});

/// All graphs with n vertices and m edges up to isomorphism.
IsoClassStream enumerate_by_edges(int n, int m, const EnumOptions& opts = {});

/// Almost-regular members of S_{n,m}.
std::vector<Graph> almost_regular_class(int n, int m, const EnumOptions& opts = {});

/// S^(1) = S_{n,m}; S^(k+1) keeps the members of S^(k) minimizing l_{k+1}.
std::vector<Graph> ladder_level(int n, int m, int k, const EnumOptions& opts = {});

/// Members of A_{n,m} with the fewest induced 3-vertex paths.
std::vector<Graph> nu_min_set(int n, int m, const EnumOptions& opts = {});

struct TauMin {
  std::optional<std::uint64_t> value;  ///< empty when the class is empty
  std::vector<Graph> witnesses;
};

TauMin tau_min(int n, int d, const EnumOptions& opts = {});

/// Members of the class described by `spec` (regular, edge count, almost
/// regular or ladder level), canonical and sorted.
std::vector<Graph> class_members(const GraphClassSpec& spec, int workers = 1);

/// Writes the class as graph6 lines to `out_path`, recording completed
/// subtree prefixes in `checkpoint_path`. An interrupted run resumes from the
/// checkpoint; the finished file is sorted and free of duplicates.
struct SpoolResult {
  std::size_t class_size = 0;
  std::size_t units_total = 0;
  std::size_t units_resumed = 0;  ///< units skipped thanks to the checkpoint
  bool parity_warning = false;
};

SpoolResult spool_class(const GraphClassSpec& spec, const std::string& out_path,
                        const std::string& checkpoint_path, const EnumOptions& opts = {});

}  // namespace treeopt
