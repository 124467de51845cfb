#include "gcomonad/forest.hpp"

#include <algorithm>
#include <numeric>

namespace gcomonad {

int ForestCover::height() const {
  int h = 0;
  for (Element v = 0; v < parent.size(); ++v) h = std::max(h, static_cast<int>(chain(v).size()));
  return h;
}

std::vector<Element> ForestCover::chain(Element v) const {
  std::vector<Element> out{v};
  for (auto p = parent[v]; p && out.size() <= parent.size(); p = parent[*p]) out.push_back(*p);
  std::reverse(out.begin(), out.end());
  return out;
}

bool ForestCover::is_ancestor(Element u, Element v) const {
  std::size_t steps = 0;
  for (std::optional<Element> x = v; x && steps <= parent.size(); x = parent[*x], ++steps)
    if (*x == u) return true;
  return false;
}

int TreeDecomposition::width() const {
  std::size_t m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

std::optional<std::string> verify_forest_cover(const Graph& g, const ForestCover& f) {
  const std::size_t n = g.size();
  if (f.parent.size() != n) return "forest cover does not cover the universe";
  for (Element v = 0; v < n; ++v) {
    if (f.parent[v] && *f.parent[v] >= n) return "parent out of range";
    std::size_t steps = 0;
    for (auto p = f.parent[v]; p; p = f.parent[*p])
      if (++steps > n) return "predecessor chain is cyclic";
  }
  for (auto [u, v] : g.edges())
    if (!f.is_ancestor(u, v) && !f.is_ancestor(v, u))
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " joins incomparable vertices";
  return std::nullopt;
}

std::optional<std::string> verify_pebbled_cover(const Graph& g, const PebbledForestCover& c, int k) {
  if (auto err = verify_forest_cover(g, c.cover)) return err;
  if (c.pebble.size() != g.size()) return "pebble map does not cover the universe";
  for (int p : c.pebble)
    if (p < 1 || p > k) return "pebble index out of range";
  for (auto [u, v] : g.edges()) {
    Element lo = u, hi = v;
    if (!c.cover.is_ancestor(lo, hi)) std::swap(lo, hi);
    const auto ch = c.cover.chain(hi);
    auto it = std::find(ch.begin(), ch.end(), lo);
    for (++it; it != ch.end(); ++it)
      if (c.pebble[*it] == c.pebble[lo])
        return "pebble " + std::to_string(c.pebble[lo]) + " reused between the ends of edge " + std::to_string(u) +
               "-" + std::to_string(v);
  }
  return std::nullopt;
}

std::optional<std::string> verify_tree_decomposition(const Graph& g, const TreeDecomposition& t) {
  const std::size_t n = g.size();
  if (t.bags.empty() || t.bags.size() != t.parent.size()) return "malformed tree";
  if (t.parent[0]) return "node 0 must be the root";
  for (std::size_t x = 1; x < t.parent.size(); ++x)
    if (!t.parent[x] || *t.parent[x] >= x) return "node " + std::to_string(x) + " has no earlier parent";
  std::vector<int> tops(n, 0);
  std::vector<char> covered(n, 0);
  for (std::size_t x = 0; x < t.bags.size(); ++x) {
    const auto& bag = t.bags[x];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] >= n) return "bag element out of range";
      if (i > 0 && bag[i - 1] >= bag[i]) return "bag " + std::to_string(x) + " is not sorted and duplicate-free";
      covered[bag[i]] = 1;
      const bool in_parent =
          t.parent[x] && std::binary_search(t.bags[*t.parent[x]].begin(), t.bags[*t.parent[x]].end(), bag[i]);
      if (!in_parent) ++tops[bag[i]];
    }
  }
  for (Element v = 0; v < n; ++v)
    if (!covered[v]) return "TD1: vertex " + std::to_string(v) + " is in no bag";
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& bag : t.bags)
      if (std::binary_search(bag.begin(), bag.end(), static_cast<Element>(u)) &&
          std::binary_search(bag.begin(), bag.end(), static_cast<Element>(v))) {
        found = true;
        break;
      }
    if (!found) return "TD2: edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
  }
  for (Element v = 0; v < n; ++v)
    if (tops[v] != 1) return "TD3: bags holding vertex " + std::to_string(v) + " are not connected";
  return std::nullopt;
}

TreeDecomposition make_orderly(const TreeDecomposition& t) {
  TreeDecomposition out;
  out.parent.push_back(std::nullopt);
  out.bags.push_back({});
  std::vector<std::size_t> map(t.bags.size());
  const std::vector<Element> empty;
  for (std::size_t x = 0; x < t.bags.size(); ++x) {
    const auto& up = t.parent[x] ? t.bags[*t.parent[x]] : empty;
    std::size_t cur = t.parent[x] ? map[*t.parent[x]] : 0;
    if (x == 0 && t.bags[0].empty()) {
      map[0] = 0;
      continue;
    }
    std::vector<Element> fresh, bag;
    std::set_difference(t.bags[x].begin(), t.bags[x].end(), up.begin(), up.end(), std::back_inserter(fresh));
    std::set_intersection(t.bags[x].begin(), t.bags[x].end(), up.begin(), up.end(), std::back_inserter(bag));
    for (std::size_t i = 0; i + 1 < fresh.size(); ++i) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), fresh[i]), fresh[i]);
      out.parent.push_back(cur);
      out.bags.push_back(bag);
      cur = out.bags.size() - 1;
    }
    out.parent.push_back(cur);
    out.bags.push_back(t.bags[x]);
    map[x] = out.bags.size() - 1;
  }
  return out;
}

PebbledForestCover decomposition_to_pebble_cover(const Graph& g, const TreeDecomposition& t, int k) {
  if (auto err = verify_tree_decomposition(g, t)) throw StructureError("invalid tree decomposition: " + *err);
  if (t.width() >= k)
    throw StructureError("decomposition width " + std::to_string(t.width()) + " is not below k = " + std::to_string(k));
  const TreeDecomposition o = make_orderly(t);
  const std::size_t n = g.size();
  std::vector<std::optional<Element>> owner(o.bags.size());
  std::vector<std::size_t> tau(n);
  for (std::size_t x = 0; x < o.bags.size(); ++x)
    for (Element v : o.bags[x]) {
      const auto& up = o.parent[x] ? o.bags[*o.parent[x]] : std::vector<Element>{};
      if (!std::binary_search(up.begin(), up.end(), v)) {
        owner[x] = v;
        tau[v] = x;
      }
    }
  PebbledForestCover c;
  c.cover.parent.assign(n, std::nullopt);
  c.pebble.assign(n, 0);
  for (std::size_t x = 0; x < o.bags.size(); ++x) {
    if (!owner[x]) continue;
    const Element v = *owner[x];
    for (auto y = o.parent[x]; y; y = o.parent[*y])
      if (owner[*y]) {
        c.cover.parent[v] = *owner[*y];
        break;
      }
    std::vector<char> used(k + 1, 0);
    for (Element w : o.bags[x])
      if (w != v) used[c.pebble[w]] = 1;
    int p = 1;
    while (used[p]) ++p;
    c.pebble[v] = p;
  }
  return c;
}

TreeDecomposition pebble_cover_to_decomposition(const PebbledForestCover& c) {
  const std::size_t n = c.pebble.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> depth(n);
  for (Element v = 0; v < n; ++v) depth[v] = c.cover.chain(v).size();
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return depth[x] < depth[y]; });
  std::vector<std::size_t> node(n);
  for (std::size_t i = 0; i < n; ++i) node[order[i]] = i + 1;
  TreeDecomposition t;
  t.parent.assign(n + 1, std::nullopt);
  t.bags.assign(n + 1, {});
  for (Element v = 0; v < n; ++v) {
    t.parent[node[v]] = c.cover.parent[v] ? node[*c.cover.parent[v]] : 0;
    const auto ch = c.cover.chain(v);
    auto& bag = t.bags[node[v]];
    for (std::size_t i = 0; i < ch.size(); ++i) {
      bool active = true;
      for (std::size_t j = i + 1; j < ch.size() && active; ++j) active = c.pebble[ch[j]] != c.pebble[ch[i]];
      if (active) bag.push_back(ch[i]);
    }
    std::sort(bag.begin(), bag.end());
  }
  return t;
}

json forest_cover_to_json(const Structure& a, const ForestCover& f) {
  json parent = json::object();
  for (Element v = 0; v < a.size(); ++v) parent[a.name(v)] = f.parent[v] ? json(a.name(*f.parent[v])) : json(nullptr);
  return {{"parent", parent}, {"height", f.height()}};
}

json pebbled_cover_to_json(const Structure& a, const PebbledForestCover& c) {
  json j = forest_cover_to_json(a, c.cover);
  json pebble = json::object();
  for (Element v = 0; v < a.size(); ++v) pebble[a.name(v)] = c.pebble[v];
  j["pebble"] = pebble;
  return j;
}

json decomposition_to_json(const Structure& a, const TreeDecomposition& t) {
  json nodes = json::array();
  for (std::size_t x = 0; x < t.bags.size(); ++x) {
    json bag = json::array();
    for (Element v : t.bags[x]) bag.push_back(a.name(v));
    nodes.push_back({{"id", x}, {"parent", t.parent[x] ? json(*t.parent[x]) : json(nullptr)}, {"bag", bag}});
  }
  return {{"nodes", nodes}, {"width", t.width()}};
}

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw StructureError(std::string("witness is missing \"") + name + "\"");
  return j[name];
}

}  // namespace

ForestCover forest_cover_from_json(const Structure& a, const json& j) {
  const json& parent = field(j, "parent");
  if (!parent.is_object()) throw StructureError("\"parent\" must be an object");
  ForestCover f;
  f.parent.assign(a.size(), std::nullopt);
  std::vector<char> seen(a.size(), 0);
  for (const auto& [name, p] : parent.items()) {
    const Element v = a.at(name);
    seen[v] = 1;
    if (p.is_null()) continue;
    if (!p.is_string()) throw StructureError("parent of " + name + " must be a string or null");
    f.parent[v] = a.at(p.get<std::string>());
  }
  for (Element v = 0; v < a.size(); ++v)
    if (!seen[v]) throw StructureError("forest cover omits element " + a.name(v));
  return f;
}

PebbledForestCover pebbled_cover_from_json(const Structure& a, const json& j) {
  PebbledForestCover c{forest_cover_from_json(a, j), std::vector<int>(a.size(), 0)};
  const json& pebble = field(j, "pebble");
  if (!pebble.is_object()) throw StructureError("\"pebble\" must be an object");
  for (const auto& [name, p] : pebble.items()) {
    if (!p.is_number_integer()) throw StructureError("pebble of " + name + " must be an integer");
    c.pebble[a.at(name)] = p.get<int>();
  }
  return c;
}

TreeDecomposition decomposition_from_json(const Structure& a, const json& j) {
  const json& nodes = field(j, "nodes");
  if (!nodes.is_array() || nodes.empty()) throw StructureError("\"nodes\" must be a non-empty array");
  TreeDecomposition t;
  t.parent.assign(nodes.size(), std::nullopt);
  t.bags.assign(nodes.size(), {});
  for (const auto& nd : nodes) {
    const json& id = field(nd, "id");
    if (!id.is_number_unsigned() || id.get<std::size_t>() >= nodes.size()) throw StructureError("bad node id");
    const std::size_t x = id.get<std::size_t>();
    const json& p = field(nd, "parent");
    if (!p.is_null()) {
      if (!p.is_number_unsigned()) throw StructureError("bad parent id");
      t.parent[x] = p.get<std::size_t>();
    }
    for (const auto& e : field(nd, "bag")) {
      if (!e.is_string()) throw StructureError("bag entries must be strings");
      t.bags[x].push_back(a.at(e.get<std::string>()));
    }
    std::sort(t.bags[x].begin(), t.bags[x].end());
  }
  return t;
}

}  // namespace gcomonad
