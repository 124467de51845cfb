#include "gcomonad/structure.hpp"

#include <algorithm>

namespace gcomonad {

Signature::Signature(std::initializer_list<std::pair<std::string, int>> symbols) {
  for (const auto& [name, arity] : symbols) add(name, arity);
}

void Signature::add(std::string name, int arity) {
  if (name.empty()) throw StructureError("relation name must be non-empty");
  if (arity < 1) throw StructureError("relation " + name + " has arity < 1");
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name,
                             [](const RelationSymbol& s, const std::string& n) { return s.name < n; });
  if (it != symbols_.end() && it->name == name) throw StructureError("duplicate relation name " + name);
  symbols_.insert(it, RelationSymbol{std::move(name), arity});
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name,
                             [](const RelationSymbol& s, std::string_view n) { return s.name < n; });
  if (it == symbols_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

int Signature::max_arity() const {
  int m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

std::size_t TupleHash::operator()(std::span<const Element> t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Element e : t) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool Relation::insert(Tuple t) {
  if (index_.contains(std::span<const Element>(t))) return false;
  index_.insert(t);
  tuples_.push_back(std::move(t));
  return true;
}

Structure::Structure(Signature sig, std::vector<std::string> universe, std::vector<Relation> relations)
    : sig_(std::move(sig)), names_(std::move(universe)), rels_(std::move(relations)) {
  if (names_.empty()) throw StructureError("empty universe");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!by_name_.emplace(names_[i], static_cast<Element>(i)).second)
      throw StructureError("duplicate element " + names_[i]);
  }
  if (rels_.size() != sig_.size()) throw StructureError("relation count does not match signature");
  for (std::size_t r = 0; r < rels_.size(); ++r) {
    if (rels_[r].arity() != sig_[r].arity) throw StructureError("arity mismatch in relation " + sig_[r].name);
    for (const auto& t : rels_[r].tuples()) {
      if (static_cast<int>(t.size()) != sig_[r].arity)
        throw StructureError("arity mismatch in relation " + sig_[r].name);
      for (Element e : t)
        if (e >= names_.size()) throw StructureError("unknown element index in relation " + sig_[r].name);
    }
  }
}

std::optional<Element> Structure::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Element Structure::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw StructureError("unknown element " + std::string(name));
}

const Relation& Structure::relation(std::string_view name) const {
  auto i = sig_.find(name);
  if (!i) throw StructureError("unknown relation " + std::string(name));
  return rels_[*i];
}

StructureBuilder::StructureBuilder(Signature sig) : sig_(std::move(sig)) {}

StructureBuilder& StructureBuilder::element(std::string name) {
  universe_.push_back(std::move(name));
  return *this;
}

StructureBuilder& StructureBuilder::elements(std::initializer_list<std::string> names) {
  for (const auto& n : names) universe_.push_back(n);
  return *this;
}

StructureBuilder& StructureBuilder::tuple(std::string_view rel, std::vector<std::string> names) {
  tuples_.emplace_back(std::string(rel), std::move(names));
  return *this;
}

Structure StructureBuilder::build() const {
  if (universe_.empty()) throw StructureError("empty universe");
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!index.emplace(universe_[i], static_cast<Element>(i)).second)
      throw StructureError("duplicate element " + universe_[i]);
  }
  std::vector<Relation> rels;
  rels.reserve(sig_.size());
  for (const auto& s : sig_) rels.emplace_back(s.arity);

  for (const auto& [rel, names] : tuples_) {
    auto r = sig_.find(rel);
    if (!r) throw StructureError("unknown relation " + rel);
    if (static_cast<int>(names.size()) != sig_[*r].arity) throw StructureError("arity mismatch in relation " + rel);
    Tuple t;
    t.reserve(names.size());
    for (const auto& n : names) {
      auto it = index.find(n);
      if (it == index.end()) throw StructureError("unknown element " + n);
      t.push_back(it->second);
    }
    if (!rels[*r].insert(std::move(t))) throw StructureError("duplicate tuple in relation " + rel);
  }
  return Structure(sig_, universe_, std::move(rels));
}

void require_same_signature(const Structure& a, const Structure& b) {
  if (!(a.signature() == b.signature())) throw StructureError("signature mismatch");
}

namespace {

// Calls fn(tuple_of_pair_indices) for every tuple in pairs^arity.
template <class Fn>
bool all_pair_tuples(std::size_t npairs, int arity, Fn&& fn) {
  if (npairs == 0) return true;
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
  while (true) {
    if (!fn(idx)) return false;
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == npairs) idx[pos--] = 0;
    if (pos < 0) return true;
  }
}

}  // namespace

bool is_relational_partial_hom(const PartialMap& p, const Structure& a, const Structure& b) {
  Tuple ta, tb;
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const int arity = a.signature()[r].arity;
    ta.resize(arity);
    tb.resize(arity);
    bool ok = all_pair_tuples(p.size(), arity, [&](const std::vector<std::size_t>& idx) {
      for (int i = 0; i < arity; ++i) {
        ta[i] = p[idx[i]].first;
        tb[i] = p[idx[i]].second;
      }
      return !a.holds(r, ta) || b.holds(r, tb);
    });
    if (!ok) return false;
  }
  return true;
}

bool is_partial_isomorphism(const PartialMap& p, const Structure& a, const Structure& b) {
  require_same_signature(a, b);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const bool same_src = p[i].first == p[j].first;
      const bool same_dst = p[i].second == p[j].second;
      if (same_src != same_dst) return false;
    }
  }
  Tuple ta, tb;
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const int arity = a.signature()[r].arity;
    ta.resize(arity);
    tb.resize(arity);
    bool ok = all_pair_tuples(p.size(), arity, [&](const std::vector<std::size_t>& idx) {
      for (int i = 0; i < arity; ++i) {
        ta[i] = p[idx[i]].first;
        tb[i] = p[idx[i]].second;
      }
      return a.holds(r, ta) == b.holds(r, tb);
    });
    if (!ok) return false;
  }
  return true;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  auto ins = [](std::vector<std::size_t>& vec, std::size_t x) {
    auto it = std::lower_bound(vec.begin(), vec.end(), x);
    if (it == vec.end() || *it != x) vec.insert(it, x);
  };
  ins(adj_[u], v);
  ins(adj_[v], u);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adj_) n += a.size();
  return n / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (std::size_t v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph gaifman_graph(const Structure& a) {
  Graph g(a.size());
  for (const auto& rel : a.relations())
    for (const auto& t : rel.tuples())
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) g.add_edge(t[i], t[j]);
  return g;
}

}  // namespace gcomonad
