#pragma once

// Exact tree-depth and tree-width by subset dynamic programming, and the
// pebble coalgebra number derived from tree-width.

#include "gcomonad/forest.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

inline constexpr std::size_t kTreeDepthMaxVertices = 20;
inline constexpr std::size_t kTreeWidthMaxVertices = 18;

struct TreeDepthResult {
  int depth = 0;
  ForestCover witness;
};

/// Tree-depth of the Gaifman graph: 1 + min over deleted vertices for a
/// connected vertex set, max over components otherwise. Throws CapacityError
/// above kTreeDepthMaxVertices.
TreeDepthResult tree_depth(const Structure& a);
TreeDepthResult tree_depth(const Graph& g);

struct TreeWidthResult {
  int width = 0;
  TreeDecomposition witness;
  std::vector<Element> elimination_order;
};

/// Tree-width of the Gaifman graph by dynamic programming over sets of
/// eliminated vertices. The witness is built from an optimal elimination
/// order; components hang under an empty root bag. Throws CapacityError
/// above kTreeWidthMaxVertices.
TreeWidthResult tree_width(const Structure& a);
TreeWidthResult tree_width(const Graph& g);

/// Decomposition of an elimination order: one bag per vertex holding it and
/// its later neighbours in the filled graph.
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Element>& order);

struct PebbleNumberResult {
  int k = 0;
  PebbledForestCover witness;
};

/// Least k admitting a k-pebble forest cover of the Gaifman graph.
PebbleNumberResult pebble_coalgebra_number(const Structure& a);

}  // namespace gcomonad
