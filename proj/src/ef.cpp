#include "gcomonad/ef.hpp"

#include <algorithm>
#include <limits>

#include "gcomonad/homomorphism.hpp"

namespace gcomonad {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

void require_k(int k) {
  if (k < 1) throw StructureError("resource bound k must be >= 1");
}

}  // namespace

std::size_t ef_universe_size(std::size_t n, int k) {
  std::size_t total = 0, layer = 1;
  for (int i = 1; i <= k; ++i) {
    layer = sat_mul(layer, n);
    total = sat_add(total, layer);
  }
  return total;
}

bool is_prefix(std::span<const Element> s, std::span<const Element> t) {
  return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
}

EfUniverse::EfUniverse(std::size_t n, int k) : n_(n), k_(k) {
  require_k(k);
  if (n == 0) throw StructureError("empty universe");
  if (ef_universe_size(n, k) == kSaturated) throw CapacityError("EF play space overflows", kSaturated);
  offsets_.push_back(0);
  std::size_t layer = 1;
  for (int i = 1; i <= k; ++i) {
    layer *= n;
    offsets_.push_back(offsets_.back() + layer);
  }
}

EfPlay EfUniverse::play(std::size_t i) const {
  std::size_t len = 1;
  while (i >= offsets_[len]) ++len;
  std::size_t rem = i - offsets_[len - 1];
  EfPlay s(len);
  for (std::size_t p = len; p-- > 0;) {
    s[p] = static_cast<Element>(rem % n_);
    rem /= n_;
  }
  return s;
}

std::optional<std::size_t> EfUniverse::find(std::span<const Element> s) const {
  if (s.empty() || s.size() > static_cast<std::size_t>(k_)) return std::nullopt;
  std::size_t rem = 0;
  for (Element e : s) {
    if (e >= n_) return std::nullopt;
    rem = rem * n_ + e;
  }
  return offsets_[s.size() - 1] + rem;
}

std::size_t EfUniverse::index(std::span<const Element> s) const {
  if (auto i = find(s)) return *i;
  throw StructureError("not a play of E_" + std::to_string(k_));
}

std::string ef_play_name(const Structure& a, std::span<const Element> s) {
  json j = json::array();
  for (Element e : s) j.push_back(a.name(e));
  return j.dump();
}

bool ef_relation_holds(const Structure& a, std::size_t rel, std::span<const EfPlay> plays) {
  Tuple last;
  for (std::size_t i = 0; i < plays.size(); ++i) {
    if (plays[i].empty()) return false;
    for (std::size_t j = i + 1; j < plays.size(); ++j)
      if (!is_prefix(plays[i], plays[j]) && !is_prefix(plays[j], plays[i])) return false;
    last.push_back(plays[i].back());
  }
  return a.holds(rel, last);
}

EfMaterialized ef_materialize(const Structure& a, int k, std::size_t cap) {
  require_k(k);
  const std::size_t required = ef_universe_size(a.size(), k);
  if (required > cap)
    throw CapacityError("E_" + std::to_string(k) + " needs " + std::to_string(required) + " plays (cap " +
                            std::to_string(cap) + ")",
                        required);
  EfUniverse u(a.size(), k);
  std::vector<std::string> names;
  names.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) names.push_back(ef_play_name(a, u.play(i)));

  std::vector<Relation> rels;
  for (std::size_t r = 0; r < a.signature().size(); ++r) {
    const int arity = a.signature()[r].arity;
    Relation rel(arity);
    // Every comparable tuple has a unique longest member u; enumerate the
    // prefix lengths of the others, requiring at least one to be u itself.
    std::vector<std::size_t> len(arity);
    Tuple last(arity), tuple(arity);
    for (std::size_t ui = 0; ui < u.size(); ++ui) {
      const EfPlay top = u.play(ui);
      const std::size_t L = top.size();
      std::fill(len.begin(), len.end(), 1);
      while (true) {
        if (std::find(len.begin(), len.end(), L) != len.end()) {
          for (int i = 0; i < arity; ++i) last[i] = top[len[i] - 1];
          if (a.holds(r, last)) {
            for (int i = 0; i < arity; ++i) tuple[i] = static_cast<Element>(u.index(std::span(top).first(len[i])));
            rel.insert(tuple);
          }
        }
        int pos = arity - 1;
        while (pos >= 0 && ++len[pos] > L) len[pos--] = 1;
        if (pos < 0) break;
      }
    }
    rels.push_back(std::move(rel));
  }
  return EfMaterialized{u, Structure(a.signature(), std::move(names), std::move(rels))};
}

EfPlay ef_coextend(const EfCoKleisli& f, std::span<const Element> s) {
  EfPlay out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = f(s.first(i + 1));
  return out;
}

std::vector<std::size_t> ef_coextend_table(const EfCoKleisli& f, const EfUniverse& target) {
  std::vector<std::size_t> out(f.universe.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = target.index(ef_coextend(f, f.universe.play(i)));
  return out;
}

EfCoKleisli ef_counit_morphism(const EfUniverse& u) {
  EfCoKleisli f{u, std::vector<Element>(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i) f.table[i] = ef_counit(u.play(i));
  return f;
}

namespace {

// Length of the prefix of s ending at the first occurrence of its last element.
std::size_t first_occurrence_length(std::span<const Element> s) {
  return static_cast<std::size_t>(std::find(s.begin(), s.end(), s.back()) - s.begin()) + 1;
}

}  // namespace

bool is_i_morphism(const EfCoKleisli& f) {
  for (std::size_t i = 0; i < f.universe.size(); ++i) {
    const EfPlay t = f.universe.play(i);
    for (std::size_t len = 1; len < t.size(); ++len)
      if (t[len - 1] == t.back() && f(std::span(t).first(len)) != f.table[i]) return false;
  }
  return true;
}

EfCoKleisli i_morphism_normalize(const EfCoKleisli& f) {
  EfCoKleisli out = f;
  for (std::size_t i = 0; i < f.universe.size(); ++i) {
    const EfPlay s = f.universe.play(i);
    const std::size_t len = first_occurrence_length(s);
    if (len < s.size()) out.table[i] = f(std::span(s).first(len));
  }
  return out;
}

EfArena::EfArena(const Structure& a, const Structure& b, int k, Mode mode) : a_(a), b_(b), k_(k), mode_(mode) {
  require_k(k);
  require_same_signature(a, b);
}

std::vector<Side> EfArena::sides() const {
  if (mode_ == Mode::existential) return {Side::left};
  return {Side::left, Side::right};
}

std::vector<Step> EfArena::moves(const Position& p, Side s) const {
  std::vector<Step> out;
  if (p.depth >= k_) return out;
  const std::size_t n = s == Side::left ? a_.size() : b_.size();
  for (std::size_t e = 0; e < n; ++e) out.push_back({0, static_cast<Element>(e)});
  return out;
}

std::vector<Step> EfArena::replies(const Position&, Side s, const Step&) const {
  std::vector<Step> out;
  const std::size_t n = s == Side::left ? b_.size() : a_.size();
  for (std::size_t e = 0; e < n; ++e) out.push_back({0, static_cast<Element>(e)});
  return out;
}

std::optional<EfArena::Position> EfArena::advance(const Position& p, Side s, const Step& mv,
                                                  const Step& reply) const {
  const std::pair<Element, Element> pr =
      s == Side::left ? std::pair{mv.elem, reply.elem} : std::pair{reply.elem, mv.elem};
  Position next{p.pairs, p.depth + 1};
  auto it = std::lower_bound(next.pairs.begin(), next.pairs.end(), pr);
  if (it == next.pairs.end() || *it != pr) next.pairs.insert(it, pr);
  const bool ok = mode_ == Mode::existential ? is_relational_partial_hom(next.pairs, a_, b_)
                                             : is_partial_isomorphism(next.pairs, a_, b_);
  if (!ok) return std::nullopt;
  return next;
}

Tuple EfArena::key(const Position& p) const {
  Tuple k{static_cast<Element>(p.depth)};
  for (const auto& [x, y] : p.pairs) {
    k.push_back(x);
    k.push_back(y);
  }
  return k;
}

json EfArena::describe(const Position& p) const {
  json pairs = json::array();
  for (const auto& [x, y] : p.pairs) pairs.push_back({a_.name(x), b_.name(y)});
  return {{"pairs", pairs}, {"round", p.depth}};
}

json EfArena::describe_step(Side s, const Step& st) const {
  return s == Side::left ? a_.name(st.elem) : b_.name(st.elem);
}

EfGameResult ef_game_exists(const Structure& a, const Structure& b, int k) {
  EfArena arena(a, b, k, EfArena::Mode::existential);
  BoundedGameSolver solver(arena);
  EfGameResult result;
  result.duplicator_wins = solver.duplicator_wins();
  if (!result.duplicator_wins || ef_universe_size(a.size(), k) > kDefaultPlayCap) return result;

  EfUniverse u(a.size(), k);
  EfCoKleisli f{u, std::vector<Element>(u.size())};
  // Depth-first over Spoiler plays, carrying the game position.
  struct Frame {
    EfPlay play;
    EfArena::Position pos;
  };
  std::vector<Frame> stack{{EfPlay{}, EfArena::Position{}}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.play.size() == static_cast<std::size_t>(k)) continue;
    for (const Step& mv : arena.moves(fr.pos, Side::left)) {
      auto rep = solver.reply(fr.pos, Side::left, mv);
      EfPlay next = fr.play;
      next.push_back(mv.elem);
      f.table[u.index(next)] = rep->step.elem;
      stack.push_back({std::move(next), std::move(rep->next)});
    }
  }
  result.strategy = std::move(f);
  return result;
}

json ef_certificate(const Structure& a, const Structure& b, const EfCoKleisli& f) {
  json entries = json::array();
  for (std::size_t i = 0; i < f.universe.size(); ++i) {
    json play = json::array();
    for (Element e : f.universe.play(i)) play.push_back(a.name(e));
    entries.push_back({{"play", play}, {"response", b.name(f.table[i])}});
  }
  return {{"kind", "ef-existential"}, {"k", f.universe.k()}, {"strategy", entries}};
}

std::optional<std::string> verify_ef_certificate(const Structure& a, const Structure& b, int k, const json& cert) {
  if (!cert.is_object() || !cert.contains("strategy") || !cert["strategy"].is_array())
    return "certificate has no strategy array";
  if (ef_universe_size(a.size(), k) > kDefaultPlayCap) return "play space too large to verify";
  EfUniverse u(a.size(), k);
  std::vector<std::optional<Element>> table(u.size());
  for (const auto& e : cert["strategy"]) {
    if (!e.contains("play") || !e.contains("response") || !e["play"].is_array()) return "malformed entry";
    EfPlay s;
    for (const auto& x : e["play"]) {
      if (!x.is_string()) return "play elements must be strings";
      auto el = a.find(x.get<std::string>());
      if (!el) return "unknown element " + x.get<std::string>();
      s.push_back(*el);
    }
    auto idx = u.find(s);
    if (!idx) return "not a play: " + e["play"].dump();
    if (!e["response"].is_string()) return "response must be a string";
    auto r = b.find(e["response"].get<std::string>());
    if (!r) return "unknown response " + e["response"].dump();
    if (table[*idx] && *table[*idx] != *r) return "conflicting responses for " + e["play"].dump();
    table[*idx] = *r;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    const EfPlay s = u.play(i);
    if (!table[i]) return "no response for " + ef_play_name(a, s);
    PartialMap pairs;
    for (std::size_t len = 1; len <= s.size(); ++len)
      pairs.emplace_back(s[len - 1], *table[u.index(std::span(s).first(len))]);
    if (!is_relational_partial_hom(pairs, a, b)) return "play " + ef_play_name(a, s) + " is lost";
  }
  return std::nullopt;
}

}  // namespace gcomonad
