#pragma once

// Forest covers, k-pebble forest covers and tree decompositions of graphs,
// their verifiers, and the constructions between decompositions and pebble
// covers.

#include <optional>
#include <string>
#include <vector>

#include "gcomonad/json_io.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

/// A forest order on the vertices, given by parent pointers.
struct ForestCover {
  std::vector<std::optional<Element>> parent;

  /// Number of vertices on a longest root-to-leaf chain. Assumes acyclic.
  int height() const;
  /// Chain from the root down to v, inclusive.
  std::vector<Element> chain(Element v) const;
  bool is_ancestor(Element u, Element v) const;  // u <= v
};

struct PebbledForestCover {
  ForestCover cover;
  std::vector<int> pebble;  // 1..k
};

/// Rooted tree of bags. parent[0] is empty; every other node has a parent
/// with a smaller index.
struct TreeDecomposition {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::vector<Element>> bags;  // each sorted

  int width() const;
};

/// nullopt when valid, otherwise the first violated condition.
std::optional<std::string> verify_forest_cover(const Graph& g, const ForestCover& f);
std::optional<std::string> verify_pebbled_cover(const Graph& g, const PebbledForestCover& c, int k);
std::optional<std::string> verify_tree_decomposition(const Graph& g, const TreeDecomposition& t);

/// Splits bags so that every node introduces at most one new vertex.
TreeDecomposition make_orderly(const TreeDecomposition& t);

/// Orderly refinement, tau(v) = topmost node holding v, v <= v' iff
/// tau(v) <= tau(v'), pebbles by the least pebble free in tau(v)'s bag.
/// Throws StructureError when width >= k.
PebbledForestCover decomposition_to_pebble_cover(const Graph& g, const TreeDecomposition& t, int k);

/// Node 0 is a root with an empty bag; node v + 1 holds the active
/// predecessors of v.
TreeDecomposition pebble_cover_to_decomposition(const PebbledForestCover& c);

json forest_cover_to_json(const Structure& a, const ForestCover& f);
json pebbled_cover_to_json(const Structure& a, const PebbledForestCover& c);
json decomposition_to_json(const Structure& a, const TreeDecomposition& t);
ForestCover forest_cover_from_json(const Structure& a, const json& j);
PebbledForestCover pebbled_cover_from_json(const Structure& a, const json& j);
TreeDecomposition decomposition_from_json(const Structure& a, const json& j);

}  // namespace gcomonad
