#include "gcomonad/params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace gcomonad {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t w : g.neighbours(v)) adj[v] |= Mask{1} << w;
  return adj;
}

Mask component_of(const std::vector<Mask>& adj, Mask within, int start) {
  Mask comp = Mask{1} << start, frontier = comp;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask fresh = adj[v] & within & ~comp;
    comp |= fresh;
    frontier |= fresh;
  }
  return comp;
}

class TreeDepthSolver {
 public:
  explicit TreeDepthSolver(const Graph& g) : adj_(adjacency_masks(g)) {}

  int depth(Mask s) {
    if (!s) return 0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    const Mask comp = component_of(adj_, s, std::countr_zero(s));
    int best;
    if (comp != s) {
      best = std::max(depth(comp), depth(s & ~comp));
    } else {
      best = std::popcount(s);
      for (Mask rest = s; rest; rest &= rest - 1) best = std::min(best, 1 + depth(s & ~(rest & -rest)));
    }
    memo_.emplace(s, best);
    return best;
  }

  void build(Mask s, std::optional<Element> parent, ForestCover& out) {
    while (s) {
      const Mask comp = component_of(adj_, s, std::countr_zero(s));
      s &= ~comp;
      const int target = depth(comp);
      for (Mask rest = comp; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (1 + depth(comp & ~(Mask{1} << v)) == target) {
          out.parent[v] = parent;
          build(comp & ~(Mask{1} << v), static_cast<Element>(v), out);
          break;
        }
      }
    }
  }

 private:
  std::vector<Mask> adj_;
  std::unordered_map<Mask, int> memo_;
};

// Vertices outside s + {v} reachable from v through s.
int q_size(const std::vector<Mask>& adj, Mask s, int v) {
  Mask seen = Mask{1} << v, frontier = seen, q = 0;
  while (frontier) {
    const int x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask nb = adj[x] & ~seen;
    seen |= nb;
    q |= nb & ~s;
    frontier |= nb & s;
  }
  return std::popcount(q);
}

}  // namespace

TreeDepthResult tree_depth(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kTreeDepthMaxVertices)
    throw CapacityError("tree-depth is limited to " + std::to_string(kTreeDepthMaxVertices) + " vertices", n);
  TreeDepthSolver solver(g);
  const Mask all = (Mask{1} << n) - 1;
  TreeDepthResult r;
  r.depth = solver.depth(all);
  r.witness.parent.assign(n, std::nullopt);
  solver.build(all, std::nullopt, r.witness);
  return r;
}

TreeDepthResult tree_depth(const Structure& a) { return tree_depth(gaifman_graph(a)); }

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Element>& order) {
  const std::size_t n = g.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  TreeDecomposition t;
  t.parent.assign(n + 1, std::nullopt);
  t.bags.assign(n + 1, {});
  auto node = [&](Element v) { return n - pos[v]; };  // later eliminated, smaller id
  for (std::size_t i = 0; i < n; ++i) {
    const Element v = order[i];
    std::vector<Element> later;
    for (Element w = 0; w < n; ++w)
      if (adj[v][w] && pos[w] > i) later.push_back(w);
    for (Element x : later)
      for (Element y : later)
        if (x != y) adj[x][y] = 1;
    auto& bag = t.bags[node(v)];
    bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    if (later.empty()) {
      t.parent[node(v)] = 0;
    } else {
      const Element next = *std::min_element(later.begin(), later.end(), [&](Element x, Element y) { return pos[x] < pos[y]; });
      t.parent[node(v)] = node(next);
    }
  }
  return t;
}

TreeWidthResult tree_width(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kTreeWidthMaxVertices)
    throw CapacityError("tree-width is limited to " + std::to_string(kTreeWidthMaxVertices) + " vertices", n);
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  std::vector<std::int8_t> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  for (Mask s = 1; s <= all; ++s) {
    int best = static_cast<int>(n);
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask prev = s & ~(Mask{1} << v);
      if (tw[prev] >= best) continue;
      best = std::min(best, std::max<int>(tw[prev], q_size(adj, prev, v)));
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  TreeWidthResult r;
  r.width = tw[all];
  std::vector<Element> reversed;
  for (Mask s = all; s;) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask prev = s & ~(Mask{1} << v);
      if (std::max<int>(tw[prev], q_size(adj, prev, v)) == tw[s]) {
        reversed.push_back(static_cast<Element>(v));
        s = prev;
        break;
      }
    }
  }
  r.elimination_order.assign(reversed.rbegin(), reversed.rend());
  r.witness = decomposition_from_elimination(g, r.elimination_order);
  return r;
}

TreeWidthResult tree_width(const Structure& a) { return tree_width(gaifman_graph(a)); }

PebbleNumberResult pebble_coalgebra_number(const Structure& a) {
  const Graph g = gaifman_graph(a);
  const TreeWidthResult tw = tree_width(g);
  PebbleNumberResult r;
  r.k = tw.width + 1;
  r.witness = decomposition_to_pebble_cover(g, tw.witness, r.k);
  return r;
}

}  // namespace gcomonad
