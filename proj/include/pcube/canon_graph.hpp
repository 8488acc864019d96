#pragma once

#include <cstdint>
#include <vector>

#include "pcube/permutation.hpp"

namespace pcube {

/// Undirected vertex-colored graph. Vertices of smaller color value come
/// first in the canonical order; the color values themselves are not part of
/// the canonical form, only their ranking.
struct ColoredGraph {
  std::vector<std::vector<int>> adjacency;
  std::vector<int> colors;

  int size() const { return static_cast<int>(adjacency.size()); }
  void add_edge(int a, int b) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
};

struct GraphCanonResult {
  /// labeling[v] is the canonical position of vertex v.
  Permutation labeling;
  /// Generators of the color-preserving automorphism group.
  std::vector<Permutation> generators;
  /// Order of the automorphism group; saturates at UINT64_MAX.
  std::uint64_t group_order = 1;
  bool order_saturated = false;
  /// Search statistics.
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Canonical labeling by individualization-refinement.
///
/// Refinement splits cells by neighbor counts into the splitter, fragments
/// ordered by increasing count. The target cell is the first non-singleton
/// cell with the most non-trivial joins to other non-singleton cells;
/// children are tried in ascending vertex order. The
/// canonical leaf is the lexicographically least (refinement traces along
/// the path, adjacency code). Automorphisms found between equivalent leaves prune the tree by
/// orbits, and the group order is the product of the first-path orbit sizes.
GraphCanonResult canonical_labeling(const ColoredGraph& graph);

/// The adjacency code of `graph` relabeled by `labeling`, for comparing
/// canonical forms directly.
std::vector<int> labeled_code(const ColoredGraph& graph, const Permutation& labeling);

}  // namespace pcube
