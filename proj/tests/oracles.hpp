#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call into the library beyond the Structure accessors.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcomonad/structure.hpp"

namespace oracle {

using gcomonad::Element;
using gcomonad::PointedStructure;
using gcomonad::Structure;
using gcomonad::Tuple;

inline bool is_hom(const std::vector<Element>& h, const Structure& a, const Structure& b) {
  for (std::size_t r = 0; r < a.relations().size(); ++r)
    for (const Tuple& t : a.relation(r).tuples()) {
      Tuple img;
      for (Element x : t) img.push_back(h[x]);
      if (!b.holds(r, img)) return false;
    }
  return true;
}

/// Tries all |B|^|A| maps.
inline bool hom_exists(const Structure& a, const Structure& b) {
  std::vector<Element> h(a.size(), 0);
  while (true) {
    if (is_hom(h, a, b)) return true;
    std::size_t i = 0;
    while (i < h.size() && ++h[i] == b.size()) h[i++] = 0;
    if (i == h.size()) return false;
  }
}

/// Every index tuple over the played positions: R^A(a_i..) implies R^B(b_i..),
/// and with iso also the converse plus equality type.
inline bool played_ok(const Structure& a, const Structure& b, const std::vector<Element>& as,
                      const std::vector<Element>& bs, bool iso) {
  const std::size_t m = as.size();
  if (iso)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if ((as[i] == as[j]) != (bs[i] == bs[j])) return false;
  for (std::size_t r = 0; r < a.signature().size(); ++r) {
    const int ar = a.signature()[r].arity;
    std::vector<std::size_t> idx(ar, 0);
    if (m == 0) continue;
    while (true) {
      Tuple ta, tb;
      for (auto i : idx) {
        ta.push_back(as[i]);
        tb.push_back(bs[i]);
      }
      const bool ha = a.holds(r, ta), hb = b.holds(r, tb);
      if (ha && !hb) return false;
      if (iso && hb && !ha) return false;
      int p = ar - 1;
      while (p >= 0 && ++idx[p] == m) idx[p--] = 0;
      if (p < 0) break;
    }
  }
  return true;
}

/// k-round EF game by naive recursion over played sequences.
inline bool ef_game(const Structure& a, const Structure& b, int k, bool back_and_forth,
                    std::vector<Element> as = {}, std::vector<Element> bs = {}) {
  if (!played_ok(a, b, as, bs, back_and_forth)) return false;
  if (static_cast<int>(as.size()) == k) return true;
  for (Element x = 0; x < a.size(); ++x) {
    bool answered = false;
    for (Element y = 0; y < b.size() && !answered; ++y) {
      as.push_back(x);
      bs.push_back(y);
      answered = ef_game(a, b, k, back_and_forth, as, bs);
      as.pop_back();
      bs.pop_back();
    }
    if (!answered) return false;
  }
  if (back_and_forth)
    for (Element y = 0; y < b.size(); ++y) {
      bool answered = false;
      for (Element x = 0; x < a.size() && !answered; ++x) {
        as.push_back(x);
        bs.push_back(y);
        answered = ef_game(a, b, k, back_and_forth, as, bs);
        as.pop_back();
        bs.pop_back();
      }
      if (!answered) return false;
    }
  return true;
}

/// Linear orders of lengths m and n are k-equivalent: Spoiler picks a point
/// in one order, splitting it into left and right intervals that the reply
/// must match with k - 1 rounds left.
inline bool lin_equiv(int m, int n, int k) {
  if (m == n || k == 0) return true;
  if (m == 0 || n == 0) return false;
  for (int side = 0; side < 2; ++side) {
    const int p = side ? n : m, q = side ? m : n;
    for (int i = 1; i <= p; ++i) {
      bool ok = false;
      for (int j = 1; j <= q && !ok; ++j) ok = lin_equiv(i - 1, j - 1, k - 1) && lin_equiv(p - i, q - j, k - 1);
      if (!ok) return false;
    }
  }
  return true;
}

struct Kripke {
  const Structure& s;
  std::vector<std::size_t> props, labels;
  explicit Kripke(const Structure& st) : s(st) {
    for (std::size_t r = 0; r < s.signature().size(); ++r)
      (s.signature()[r].arity == 1 ? props : labels).push_back(r);
  }
  bool prop(std::size_t r, Element w) const { return s.holds(r, Tuple{w}); }
  std::vector<Element> succ(std::size_t r, Element w) const {
    std::vector<Element> out;
    for (Element v = 0; v < s.size(); ++v)
      if (s.holds(r, Tuple{w, v})) out.push_back(v);
    return out;
  }
};

inline bool props_rel(const Kripke& a, Element x, const Kripke& b, Element y, bool equal) {
  for (std::size_t r : a.props) {
    if (a.prop(r, x) && !b.prop(r, y)) return false;
    if (equal && b.prop(r, y) && !a.prop(r, x)) return false;
  }
  return true;
}

inline bool simulates(const Kripke& a, Element x, const Kripke& b, Element y, int k) {
  if (!props_rel(a, x, b, y, false)) return false;
  if (k == 0) return true;
  for (std::size_t r : a.labels)
    for (Element x2 : a.succ(r, x)) {
      bool found = false;
      for (Element y2 : b.succ(r, y)) found = found || simulates(a, x2, b, y2, k - 1);
      if (!found) return false;
    }
  return true;
}

inline bool bisimilar(const Kripke& a, Element x, const Kripke& b, Element y, int k) {
  if (!props_rel(a, x, b, y, true)) return false;
  if (k == 0) return true;
  for (std::size_t r : a.labels) {
    const auto sx = a.succ(r, x), sy = b.succ(r, y);
    for (Element x2 : sx) {
      bool found = false;
      for (Element y2 : sy) found = found || bisimilar(a, x2, b, y2, k - 1);
      if (!found) return false;
    }
    for (Element y2 : sy) {
      bool found = false;
      for (Element x2 : sx) found = found || bisimilar(a, x2, b, y2, k - 1);
      if (!found) return false;
    }
  }
  return true;
}

/// Counting bisimilarity: some permutation pairs the successor lists.
inline bool graded(const Kripke& a, Element x, const Kripke& b, Element y, int k) {
  if (!props_rel(a, x, b, y, true)) return false;
  if (k == 0) return true;
  for (std::size_t r : a.labels) {
    const auto sx = a.succ(r, x);
    auto sy = b.succ(r, y);
    if (sx.size() != sy.size()) return false;
    bool found = false;
    do {
      bool all = true;
      for (std::size_t i = 0; i < sx.size() && all; ++i) all = graded(a, sx[i], b, sy[i], k - 1);
      found = all;
    } while (!found && std::next_permutation(sy.begin(), sy.end()));
    if (!found) return false;
  }
  return true;
}

using Adj = std::vector<std::vector<char>>;

inline Adj gaifman(const Structure& a) {
  Adj g(a.size(), std::vector<char>(a.size(), 0));
  for (const auto& rel : a.relations())
    for (const Tuple& t : rel.tuples())
      for (Element x : t)
        for (Element y : t)
          if (x != y) g[x][y] = 1;
  return g;
}

/// Minimum over all elimination orders of the largest set of later
/// neighbours in the filled graph.
inline int tree_width(const Adj& g0) {
  const std::size_t n = g0.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = static_cast<int>(n) - 1;
  do {
    Adj g = g0;
    std::vector<char> gone(n, 0);
    int w = 0;
    for (std::size_t v : perm) {
      std::vector<std::size_t> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (!gone[u] && g[v][u]) nb.push_back(u);
      w = std::max(w, static_cast<int>(nb.size()));
      for (auto x : nb)
        for (auto y : nb)
          if (x != y) g[x][y] = 1;
      gone[v] = 1;
      if (w >= best) break;
    }
    best = std::min(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::max(best, 0);
}

/// Recursive definition on vertex subsets.
inline int tree_depth(const Adj& g, std::vector<std::size_t> vs) {
  if (vs.empty()) return 0;
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (auto v : vs) in[v] = 1;
  std::vector<std::size_t> comp{vs[0]};
  seen[vs[0]] = 1;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (auto u : vs)
      if (!seen[u] && g[comp[i]][u]) {
        seen[u] = 1;
        comp.push_back(u);
      }
  if (comp.size() < vs.size()) {
    std::vector<std::size_t> rest;
    for (auto v : vs)
      if (!seen[v]) rest.push_back(v);
    return std::max(tree_depth(g, comp), tree_depth(g, rest));
  }
  int best = static_cast<int>(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto smaller = vs;
    smaller.erase(smaller.begin() + static_cast<long>(i));
    best = std::min(best, 1 + tree_depth(g, smaller));
  }
  return best;
}

inline int tree_depth(const Adj& g) {
  std::vector<std::size_t> vs(g.size());
  std::iota(vs.begin(), vs.end(), 0);
  return tree_depth(g, vs);
}

/// Calls f(parent) for every acyclic parent function (-1 = root).
inline void for_each_forest(std::size_t n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parent(n, -1);
  while (true) {
    bool acyclic = true;
    for (std::size_t v = 0; v < n && acyclic; ++v) {
      int x = static_cast<int>(v);
      for (std::size_t steps = 0; x >= 0 && steps <= n; ++steps) x = parent[x];
      acyclic = x < 0;
    }
    if (acyclic) f(parent);
    std::size_t i = 0;
    while (i < n && ++parent[i] == static_cast<int>(n)) parent[i++] = -1;
    if (i == n) return;
  }
}

inline int forest_height(const std::vector<int>& parent) {
  int h = 0;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    int d = 0;
    for (int x = static_cast<int>(v); x >= 0; x = parent[x]) ++d;
    h = std::max(h, d);
  }
  return h;
}

inline bool ancestor(const std::vector<int>& parent, int u, int v) {
  for (int x = v; x >= 0; x = parent[x])
    if (x == u) return true;
  return false;
}

/// Least height of a forest in which every edge joins comparable vertices.
inline int tree_depth_by_forests(const Adj& g) {
  int best = static_cast<int>(g.size());
  for_each_forest(g.size(), [&](const std::vector<int>& p) {
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = 0; v < g.size(); ++v)
        if (g[u][v] && !ancestor(p, static_cast<int>(u), static_cast<int>(v)) &&
            !ancestor(p, static_cast<int>(v), static_cast<int>(u)))
          return;
    best = std::min(best, forest_height(p));
  });
  return best;
}

}  // namespace oracle
