#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace treeopt::detail {

constexpr int kMaxCanon = 16;

/// Adjacency bits in graph6 order, packed most significant first, so that
/// array comparison is lexicographic bit-string comparison.
using Certificate = std::array<std::uint64_t, 2>;

struct SmallGraph {
  int n = 0;
  std::array<std::uint64_t, kMaxCanon> rows{};
};

struct CanonResult {
  std::array<int, kMaxCanon> label{};
  Certificate cert{};
};

/// Canonical labeling of a (colored) small graph. `colors` may be empty.
CanonResult canonicalize(const SmallGraph& g, std::span<const int> colors = {});

SmallGraph apply_labeling(const SmallGraph& g, const std::array<int, kMaxCanon>& label);

}  // namespace treeopt::detail
