#pragma once

#include <string>
#include <vector>

#include "canon_detail.hpp"
#include "treeopt/enumeration.hpp"

namespace treeopt::detail {

/// Vertex-by-vertex canonical augmentation with necessary-condition pruning.
/// A child is accepted when its new vertex lies in the automorphism orbit of
/// the canonically chosen minimum-degree vertex; siblings are deduplicated
/// by certificate.
class Generator {
 public:
  enum class Mode { Regular, Edges };

  Generator(Mode mode, int n, int target);  // target = d or m

  /// Deterministic split-level frontier, independent of worker count.
  std::vector<SmallGraph> frontier() const;

  /// Canonical codes of every complete graph below `node`.
  std::vector<std::string> expand(const SmallGraph& node) const;

  std::string code_of(const SmallGraph& g) const;

 private:
  bool feasible(const SmallGraph& g) const;
  std::vector<SmallGraph> children(const SmallGraph& g) const;
  void dfs(const SmallGraph& g, std::vector<std::string>& out) const;

  Mode mode_;
  int n_;
  int target_;
};

/// Plan for a class: the generator runs on the sparser side (complemented
/// when that is cheaper) and `finish` maps each generated code to the class
/// member's canonical code.
struct ClassPlan {
  GraphClassSpec spec;
  bool complemented = false;
  bool parity_warning = false;
  bool empty = false;
  Generator::Mode mode = Generator::Mode::Edges;
  int target = 0;

  std::string finish(const std::string& code) const;
};

ClassPlan plan_for(const GraphClassSpec& spec);

}  // namespace treeopt::detail
