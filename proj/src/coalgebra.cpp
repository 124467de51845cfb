#include "gcomonad/coalgebra.hpp"

#include <algorithm>

#include "gcomonad/modal.hpp"

namespace gcomonad {

namespace {

std::string tuple_text(const Structure& a, std::size_t rel, const Tuple& t) {
  std::string s = a.signature()[rel].name + "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + a.name(t[i]);
  return s + ")";
}

template <class Play, class ElemOf, class Holds>
std::optional<std::string> verify_sequence_coalgebra(const Structure& a, const std::vector<Play>& alpha, ElemOf elem,
                                                     Holds holds) {
  if (alpha.size() != a.size()) return "coalgebra is not total on the universe";
  for (Element x = 0; x < a.size(); ++x) {
    const Play& s = alpha[x];
    if (s.empty()) return "empty play assigned to " + a.name(x);
    if (elem(s.back()) != x) return "counit law fails at " + a.name(x);
  }
  for (Element x = 0; x < a.size(); ++x) {
    const Play& s = alpha[x];
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Play& t = alpha[elem(s[i])];
      if (t.size() != i + 1 || !std::equal(t.begin(), t.end(), s.begin()))
        return "comultiplication law fails at " + a.name(x);
    }
  }
  std::vector<Play> plays;
  for (std::size_t r = 0; r < a.signature().size(); ++r) {
    for (const Tuple& t : a.relation(r).tuples()) {
      plays.clear();
      for (Element x : t) plays.push_back(alpha[x]);
      if (!holds(r, plays)) return "homomorphism condition fails for " + tuple_text(a, r, t);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> verify_ef_coalgebra(const Structure& a, int k, const EfCoalgebra& alpha) {
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    if (alpha[x].size() > static_cast<std::size_t>(k))
      return "play assigned to " + a.name(static_cast<Element>(x)) + " is longer than k";
    for (Element e : alpha[x])
      if (e >= a.size()) return "play element out of range";
  }
  return verify_sequence_coalgebra(
      a, alpha, [](Element e) { return e; },
      [&](std::size_t r, const std::vector<EfPlay>& plays) { return ef_relation_holds(a, r, plays); });
}

std::optional<std::string> verify_pebble_coalgebra(const Structure& a, int k, const PebbleCoalgebra& alpha) {
  for (const auto& s : alpha)
    for (const auto& mv : s) {
      if (mv.pebble < 1 || mv.pebble > k) return "pebble index out of range";
      if (mv.elem >= a.size()) return "play element out of range";
    }
  return verify_sequence_coalgebra(
      a, alpha, [](const PebbleMove& m) { return m.elem; },
      [&](std::size_t r, const std::vector<PebblePlay>& plays) { return pebble_relation_holds(a, r, plays); });
}

std::optional<std::string> verify_modal_coalgebra(const PointedStructure& p, int k, const ModalCoalgebra& alpha) {
  require_modal_k(k);
  const Structure& a = p.base;
  KripkeView v(a);
  if (alpha.size() != a.size()) return "coalgebra is not sized to the universe";
  const auto reach = reachable_worlds(v, p.point);
  for (Element w : reach) {
    if (!alpha[w]) return "coalgebra undefined at reachable world " + a.name(w);
    const ModalPlay& s = *alpha[w];
    if (s.worlds.empty() || s.labels.size() + 1 != s.worlds.size()) return "malformed play at " + a.name(w);
    if (s.labels.size() > static_cast<std::size_t>(k)) return "play assigned to " + a.name(w) + " is longer than k";
    if (s.worlds.front() != p.point) return "play assigned to " + a.name(w) + " does not start at the point";
    for (std::size_t i = 0; i < s.labels.size(); ++i) {
      const std::string missing = "play assigned to " + a.name(w) + " uses a missing transition";
      if (s.labels[i] >= a.signature().size() || a.signature()[s.labels[i]].arity != 2) return missing;
      const auto& succ = v.successors(s.labels[i], s.worlds[i]);
      if (!std::binary_search(succ.begin(), succ.end(), s.worlds[i + 1])) return missing;
    }
    if (s.worlds.back() != w) return "counit law fails at " + a.name(w);
  }
  for (Element w : reach) {
    const ModalPlay& s = *alpha[w];
    for (std::size_t i = 0; i < s.worlds.size(); ++i) {
      const auto& t = alpha[s.worlds[i]];
      if (!t || t->worlds.size() != i + 1 || !std::equal(t->worlds.begin(), t->worlds.end(), s.worlds.begin()) ||
          !std::equal(t->labels.begin(), t->labels.end(), s.labels.begin()))
        return "comultiplication law fails at " + a.name(w);
    }
  }
  for (Element w : reach) {
    for (std::size_t r : v.labels()) {
      for (Element x : v.successors(r, w)) {
        const ModalPlay& s = *alpha[w];
        const ModalPlay& t = *alpha[x];
        const bool extends = t.worlds.size() == s.worlds.size() + 1 &&
                             std::equal(s.worlds.begin(), s.worlds.end(), t.worlds.begin()) &&
                             std::equal(s.labels.begin(), s.labels.end(), t.labels.begin()) && t.labels.back() == r;
        if (!extends)
          return "homomorphism condition fails for " + a.signature()[r].name + "(" + a.name(w) + "," + a.name(x) + ")";
      }
    }
  }
  return std::nullopt;
}

EfCoalgebra forest_cover_to_ef_coalgebra(const ForestCover& f, int k) {
  if (f.height() > k)
    throw StructureError("forest cover of height " + std::to_string(f.height()) + " exceeds k = " + std::to_string(k));
  EfCoalgebra alpha(f.parent.size());
  for (Element v = 0; v < f.parent.size(); ++v) alpha[v] = f.chain(v);
  return alpha;
}

ForestCover ef_coalgebra_to_forest_cover(const Structure& a, int k, const EfCoalgebra& alpha) {
  if (auto err = verify_ef_coalgebra(a, k, alpha)) throw StructureError("not a coalgebra: " + *err);
  ForestCover f;
  f.parent.assign(a.size(), std::nullopt);
  for (Element v = 0; v < a.size(); ++v)
    if (alpha[v].size() > 1) f.parent[v] = alpha[v][alpha[v].size() - 2];
  return f;
}

PebbleCoalgebra pebble_cover_to_coalgebra(const PebbledForestCover& c) {
  PebbleCoalgebra alpha(c.pebble.size());
  for (Element v = 0; v < c.pebble.size(); ++v)
    for (Element w : c.cover.chain(v)) alpha[v].push_back(PebbleMove{c.pebble[w], w});
  return alpha;
}

PebblePlay ef_to_pebble_morphism(std::span<const Element> s) {
  PebblePlay out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(PebbleMove{static_cast<int>(i) + 1, s[i]});
  return out;
}

PebbleCoalgebra ef_to_pebble_coalgebra(const EfCoalgebra& alpha) {
  PebbleCoalgebra out;
  for (const auto& s : alpha) out.push_back(ef_to_pebble_morphism(s));
  return out;
}

std::optional<ModalCoalgebra> modal_coalgebra(const PointedStructure& p, int k) {
  require_modal_k(k);
  auto h = modal_depth(p);
  if (!h || *h > k) return std::nullopt;
  KripkeView v(p.base);
  ModalCoalgebra alpha(p.base.size());
  alpha[p.point] = ModalPlay{{p.point}, {}};
  for (Element w : reachable_worlds(v, p.point))
    for (std::size_t r : v.labels())
      for (Element x : v.successors(r, w)) {
        ModalPlay s = *alpha[w];
        s.labels.push_back(r);
        s.worlds.push_back(x);
        alpha[x] = std::move(s);
      }
  return alpha;
}

json ef_coalgebra_to_json(const Structure& a, int k, const EfCoalgebra& alpha) {
  json m = json::object();
  for (Element v = 0; v < a.size(); ++v) {
    json s = json::array();
    for (Element e : alpha[v]) s.push_back(a.name(e));
    m[a.name(v)] = s;
  }
  return {{"comonad", "ef"}, {"k", k}, {"alpha", m}};
}

json pebble_coalgebra_to_json(const Structure& a, int k, const PebbleCoalgebra& alpha) {
  json m = json::object();
  for (Element v = 0; v < a.size(); ++v) {
    json s = json::array();
    for (const auto& mv : alpha[v]) s.push_back({mv.pebble, a.name(mv.elem)});
    m[a.name(v)] = s;
  }
  return {{"comonad", "pebble"}, {"k", k}, {"alpha", m}};
}

json modal_coalgebra_to_json(const Structure& a, int k, const ModalCoalgebra& alpha) {
  json m = json::object();
  for (Element v = 0; v < a.size(); ++v) {
    if (!alpha[v]) continue;
    json s = json::array({a.name(alpha[v]->worlds[0])});
    for (std::size_t i = 0; i < alpha[v]->labels.size(); ++i) {
      s.push_back(a.signature()[alpha[v]->labels[i]].name);
      s.push_back(a.name(alpha[v]->worlds[i + 1]));
    }
    m[a.name(v)] = s;
  }
  return {{"comonad", "modal"}, {"k", k}, {"alpha", m}};
}

namespace {

const json& alpha_object(const json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j["alpha"].is_object())
    throw StructureError("coalgebra file needs an \"alpha\" object");
  return j["alpha"];
}

Element element_of(const Structure& a, const json& x) {
  if (!x.is_string()) throw StructureError("play entries must be element names");
  return a.at(x.get<std::string>());
}

}  // namespace

EfCoalgebra ef_coalgebra_from_json(const Structure& a, const json& j) {
  EfCoalgebra alpha(a.size());
  for (const auto& [name, play] : alpha_object(j).items()) {
    if (!play.is_array()) throw StructureError("play of " + name + " must be an array");
    auto& s = alpha[a.at(name)];
    for (const auto& x : play) s.push_back(element_of(a, x));
  }
  return alpha;
}

PebbleCoalgebra pebble_coalgebra_from_json(const Structure& a, const json& j) {
  PebbleCoalgebra alpha(a.size());
  for (const auto& [name, play] : alpha_object(j).items()) {
    if (!play.is_array()) throw StructureError("play of " + name + " must be an array");
    auto& s = alpha[a.at(name)];
    for (const auto& mv : play) {
      if (!mv.is_array() || mv.size() != 2 || !mv[0].is_number_integer())
        throw StructureError("pebble moves must be [pebble, element]");
      s.push_back(PebbleMove{mv[0].get<int>(), element_of(a, mv[1])});
    }
  }
  return alpha;
}

ModalCoalgebra modal_coalgebra_from_json(const Structure& a, const json& j) {
  ModalCoalgebra alpha(a.size());
  for (const auto& [name, play] : alpha_object(j).items()) {
    if (!play.is_array() || play.size() % 2 == 0) throw StructureError("modal play of " + name + " is malformed");
    ModalPlay s;
    for (std::size_t i = 0; i < play.size(); ++i) {
      if (i % 2 == 0) {
        s.worlds.push_back(element_of(a, play[i]));
        continue;
      }
      if (!play[i].is_string()) throw StructureError("labels must be relation names");
      auto r = a.signature().find(play[i].get<std::string>());
      if (!r) throw StructureError("unknown relation " + play[i].get<std::string>());
      s.labels.push_back(*r);
    }
    alpha[a.at(name)] = std::move(s);
  }
  return alpha;
}

}  // namespace gcomonad
