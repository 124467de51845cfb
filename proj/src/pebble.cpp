#include "gcomonad/pebble.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "gcomonad/matching.hpp"

namespace gcomonad {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kMaxCertificateEntries = 200'000;

void require_k(int k) {
  if (k < 1) throw StructureError("number of pebbles k must be >= 1");
}

}  // namespace

std::size_t pebble_universe_size(std::size_t n, int k, int max_len) {
  if (k < 1) return 0;
  const std::size_t base = n * static_cast<std::size_t>(k);
  std::size_t total = 0, layer = 1;
  for (int i = 1; i <= max_len; ++i) {
    if (base != 0 && layer > kSaturated / base) return kSaturated;
    layer *= base;
    if (total > kSaturated - layer) return kSaturated;
    total += layer;
  }
  return total;
}

bool is_prefix(std::span<const PebbleMove> s, std::span<const PebbleMove> t) {
  return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
}

bool pebble_relation_holds(const Structure& a, std::size_t rel, std::span<const PebblePlay> plays) {
  Tuple last;
  for (std::size_t i = 0; i < plays.size(); ++i) {
    const PebblePlay& si = plays[i];
    if (si.empty()) return false;
    for (std::size_t j = 0; j < plays.size(); ++j) {
      const PebblePlay& sj = plays[j];
      const bool si_le = is_prefix(si, sj);
      if (!si_le && !is_prefix(sj, si)) return false;
      if (!si_le) continue;
      const int p = si.back().pebble;
      for (std::size_t m = si.size(); m < sj.size(); ++m)
        if (sj[m].pebble == p) return false;
    }
    last.push_back(si.back().elem);
  }
  return a.holds(rel, last);
}

PebbleUniverse::PebbleUniverse(std::size_t n, int k, int max_len) : n_(n), k_(k), max_len_(max_len) {
  require_k(k);
  if (n == 0) throw StructureError("empty universe");
  if (max_len < 1) throw StructureError("maximum play length must be >= 1");
  if (pebble_universe_size(n, k, max_len) == kSaturated) throw CapacityError("pebble play space overflows", kSaturated);
  const std::size_t base = n * static_cast<std::size_t>(k);
  offsets_.push_back(0);
  std::size_t layer = 1;
  for (int i = 1; i <= max_len; ++i) {
    layer *= base;
    offsets_.push_back(offsets_.back() + layer);
  }
}

PebblePlay PebbleUniverse::play(std::size_t i) const {
  const std::size_t base = n_ * static_cast<std::size_t>(k_);
  std::size_t len = 1;
  while (i >= offsets_[len]) ++len;
  std::size_t rem = i - offsets_[len - 1];
  PebblePlay s(len);
  for (std::size_t p = len; p-- > 0;) {
    const std::size_t code = rem % base;
    rem /= base;
    s[p] = PebbleMove{static_cast<int>(code / n_) + 1, static_cast<Element>(code % n_)};
  }
  return s;
}

std::optional<std::size_t> PebbleUniverse::find(std::span<const PebbleMove> s) const {
  if (s.empty() || s.size() > static_cast<std::size_t>(max_len_)) return std::nullopt;
  const std::size_t base = n_ * static_cast<std::size_t>(k_);
  std::size_t rem = 0;
  for (const auto& mv : s) {
    if (mv.pebble < 1 || mv.pebble > k_ || mv.elem >= n_) return std::nullopt;
    rem = rem * base + static_cast<std::size_t>(mv.pebble - 1) * n_ + mv.elem;
  }
  return offsets_[s.size() - 1] + rem;
}

std::size_t PebbleUniverse::index(std::span<const PebbleMove> s) const {
  if (auto i = find(s)) return *i;
  throw StructureError("not a play of the pebble truncation");
}

std::string pebble_play_name(const Structure& a, std::span<const PebbleMove> s) {
  json j = json::array();
  for (const auto& mv : s) j.push_back({mv.pebble, a.name(mv.elem)});
  return j.dump();
}

PebbleMaterialized pebble_truncate(const Structure& a, int k, int max_len, std::size_t cap) {
  require_k(k);
  const std::size_t required = pebble_universe_size(a.size(), k, max_len);
  if (required > cap)
    throw CapacityError("pebble truncation needs " + std::to_string(required) + " plays (cap " +
                            std::to_string(cap) + ")",
                        required);
  PebbleUniverse u(a.size(), k, max_len);
  std::vector<std::string> names;
  names.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) names.push_back(pebble_play_name(a, u.play(i)));

  std::vector<Relation> rels;
  for (std::size_t r = 0; r < a.signature().size(); ++r) {
    const int arity = a.signature()[r].arity;
    Relation rel(arity);
    std::vector<std::size_t> len(arity);
    Tuple last(arity), tuple(arity);
    for (std::size_t ui = 0; ui < u.size(); ++ui) {
      const PebblePlay top = u.play(ui);
      const std::size_t L = top.size();
      // active[i]: the pebble placed at position i is not moved again in top.
      std::vector<char> active(L, 1);
      for (std::size_t i = 0; i < L; ++i)
        for (std::size_t m = i + 1; m < L; ++m)
          if (top[m].pebble == top[i].pebble) active[i] = 0;
      std::fill(len.begin(), len.end(), 1);
      while (true) {
        bool ok = std::find(len.begin(), len.end(), L) != len.end();
        for (int i = 0; ok && i < arity; ++i) ok = active[len[i] - 1];
        if (ok) {
          for (int i = 0; i < arity; ++i) last[i] = top[len[i] - 1].elem;
          if (a.holds(r, last)) {
            for (int i = 0; i < arity; ++i)
              tuple[i] = static_cast<Element>(u.index(std::span(top).first(len[i])));
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
  return PebbleMaterialized{u, Structure(a.signature(), std::move(names), std::move(rels))};
}

PebblePlay pebble_coextend(const PebbleStrategyFn& f, std::span<const PebbleMove> s) {
  PebblePlay out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto v = f(s.first(i + 1));
    if (!v) throw StructureError("strategy undefined on a prefix of the play");
    out[i] = PebbleMove{s[i].pebble, *v};
  }
  return out;
}

std::vector<std::size_t> pebble_coextend_table(const PebbleCoKleisli& f, const PebbleUniverse& target) {
  std::vector<std::size_t> out(f.universe.size());
  PebbleStrategyFn fn = [&](std::span<const PebbleMove> s) -> std::optional<Element> { return f(s); };
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = target.index(pebble_coextend(fn, f.universe.play(i)));
  return out;
}

PebbleCoKleisli pebble_counit_morphism(const PebbleUniverse& u) {
  PebbleCoKleisli f{u, std::vector<Element>(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i) f.table[i] = pebble_counit(u.play(i));
  return f;
}

namespace {

// Pebble assignments as k slot codes: 0 = pebble unused, otherwise
// 1 + a * |B| + b. Canonical positions sort the slots, since the game is
// symmetric in pebble indices.
class PebbleSpace {
 public:
  PebbleSpace(const Structure& a, const Structure& b, int k, PebbleGameKind kind)
      : a_(a), b_(b), k_(static_cast<std::size_t>(k)), kind_(kind) {
    enumerate();
    alive_.assign(positions_.size(), 1);
  }

  Element code(Element x, Element y) const { return 1 + x * static_cast<Element>(b_.size()) + y; }
  std::pair<Element, Element> decode(Element c) const {
    return {(c - 1) / static_cast<Element>(b_.size()), (c - 1) % static_cast<Element>(b_.size())};
  }

  PartialMap pairs_of(std::span<const Element> slots) const {
    PartialMap p;
    for (Element c : slots)
      if (c != 0) p.push_back(decode(c));
    return p;
  }

  bool winning(std::span<const Element> slots) const {
    const PartialMap p = pairs_of(slots);
    return kind_ == PebbleGameKind::existential ? is_relational_partial_hom(p, a_, b_)
                                                : is_partial_isomorphism(p, a_, b_);
  }

  // Index of the canonical form of an assignment, if it is in the winning set.
  std::optional<std::size_t> lookup(Tuple slots) const {
    std::sort(slots.begin(), slots.end());
    auto it = index_.find(slots);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool alive_after(const Tuple& slots, std::size_t p, Element c) const {
    Tuple next = slots;
    next[p] = c;
    auto i = lookup(std::move(next));
    return i && alive_[*i];
  }

  bool survives(std::size_t idx) const {
    const Tuple& pos = positions_[idx];
    const Element na = static_cast<Element>(a_.size()), nb = static_cast<Element>(b_.size());
    for (std::size_t p = 0; p < k_; ++p) {
      if (p > 0 && pos[p] == pos[p - 1]) continue;  // same slot value, same outcome
      if (kind_ == PebbleGameKind::bijection) {
        std::vector<std::vector<char>> adj(na, std::vector<char>(nb, 0));
        for (Element x = 0; x < na; ++x)
          for (Element y = 0; y < nb; ++y) adj[x][y] = alive_after(pos, p, code(x, y));
        if (!perfect_matching(adj)) return false;
        continue;
      }
      for (Element x = 0; x < na; ++x) {
        bool answered = false;
        for (Element y = 0; y < nb && !answered; ++y) answered = alive_after(pos, p, code(x, y));
        if (!answered) return false;
      }
      if (kind_ == PebbleGameKind::back_and_forth) {
        for (Element y = 0; y < nb; ++y) {
          bool answered = false;
          for (Element x = 0; x < na && !answered; ++x) answered = alive_after(pos, p, code(x, y));
          if (!answered) return false;
        }
      }
    }
    return true;
  }

  void solve() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (alive_[i] && !survives(i)) {
          alive_[i] = 0;
          changed = true;
        }
      }
    }
  }

  bool root_alive() const { return alive_[*lookup(Tuple(k_, 0))]; }
  std::size_t size() const { return positions_.size(); }

  json strategy() const {
    const bool two_sided = kind_ == PebbleGameKind::back_and_forth;
    const Element na = static_cast<Element>(a_.size()), nb = static_cast<Element>(b_.size());
    json out = json::array();
    std::unordered_set<Tuple, TupleHash, TupleEq> seen;
    std::deque<Tuple> queue{Tuple(k_, 0)};
    seen.insert(queue.front());
    while (!queue.empty()) {
      const Tuple pos = queue.front();
      queue.pop_front();
      json assignment = json::array();
      for (std::size_t p = 0; p < k_; ++p) {
        if (pos[p] == 0) continue;
        auto [x, y] = decode(pos[p]);
        assignment.push_back({static_cast<int>(p) + 1, a_.name(x), b_.name(y)});
      }
      for (int side = 0; side < (two_sided ? 2 : 1); ++side) {
        for (std::size_t p = 0; p < k_; ++p) {
          const Element nmove = side == 0 ? na : nb, nreply = side == 0 ? nb : na;
          for (Element m = 0; m < nmove; ++m) {
            for (Element r = 0; r < nreply; ++r) {
              const Element c = side == 0 ? code(m, r) : code(r, m);
              if (!alive_after(pos, p, c)) continue;
              json entry = {{"assignment", assignment},
                            {"move", {static_cast<int>(p) + 1, side == 0 ? a_.name(m) : b_.name(m)}},
                            {"response", side == 0 ? b_.name(r) : a_.name(r)}};
              if (two_sided) entry["side"] = side == 0 ? "left" : "right";
              out.push_back(std::move(entry));
              if (out.size() > kMaxCertificateEntries) return nullptr;
              Tuple next = pos;
              next[p] = c;
              if (seen.insert(next).second) queue.push_back(std::move(next));
              break;
            }
          }
        }
      }
    }
    return out;
  }

 private:
  void enumerate() {
    const Element max_code = static_cast<Element>(a_.size() * b_.size());
    Tuple cur(k_, 0);
    auto rec = [&](auto&& self, std::size_t d, Element min_code) -> void {
      if (d == k_) {
        index_.emplace(cur, positions_.size());
        positions_.push_back(cur);
        return;
      }
      for (Element c = min_code; c <= max_code; ++c) {
        cur[d] = c;
        if (c != 0 && !winning(std::span(cur).first(d + 1))) continue;
        self(self, d + 1, c);
      }
      cur[d] = 0;
    };
    rec(rec, 0, 0);
  }

  const Structure& a_;
  const Structure& b_;
  std::size_t k_;
  PebbleGameKind kind_;
  std::vector<Tuple> positions_;
  std::unordered_map<Tuple, std::size_t, TupleHash, TupleEq> index_;
  std::vector<char> alive_;
};

}  // namespace

PebbleGameResult solve_pebble_game(const Structure& a, const Structure& b, int k, PebbleGameKind kind) {
  require_k(k);
  require_same_signature(a, b);
  PebbleGameResult result;
  result.certificate = nullptr;
  if (kind == PebbleGameKind::bijection && a.size() != b.size()) return result;
  PebbleSpace space(a, b, k, kind);
  result.positions = space.size();
  space.solve();
  result.duplicator_wins = space.root_alive();
  if (result.duplicator_wins && kind != PebbleGameKind::bijection) {
    json strat = space.strategy();
    if (!strat.is_null()) {
      result.certificate = {{"kind", kind == PebbleGameKind::existential ? "pebble-existential" : "pebble-back-and-forth"},
                            {"k", k},
                            {"strategy", std::move(strat)}};
    }
  }
  return result;
}

std::optional<std::string> verify_pebble_certificate(const Structure& a, const Structure& b, int k,
                                                     const json& cert) {
  require_same_signature(a, b);
  if (!cert.is_object() || !cert.contains("strategy") || !cert["strategy"].is_array())
    return "certificate has no strategy array";
  // Assignment: pebble -> (a, b); keys are JSON dumps of the sorted assignment.
  using Assignment = std::vector<std::optional<std::pair<Element, Element>>>;
  auto describe = [&](const Assignment& asg) {
    json j = json::array();
    for (std::size_t p = 0; p < asg.size(); ++p)
      if (asg[p]) j.push_back({static_cast<int>(p) + 1, a.name(asg[p]->first), b.name(asg[p]->second)});
    return j;
  };
  std::unordered_map<std::string, std::string> table;
  for (const auto& e : cert["strategy"]) {
    if (!e.is_object() || !e.contains("assignment") || !e.contains("move") || !e.contains("response"))
      return "malformed entry";
    if (e.contains("side") && e["side"] != "left") continue;
    if (!e["response"].is_string()) return "response must be a string";
    table[json{e["assignment"], e["move"]}.dump()] = e["response"].get<std::string>();
  }
  std::unordered_set<std::string> seen;
  std::deque<Assignment> queue{Assignment(static_cast<std::size_t>(k))};
  seen.insert(describe(queue.front()).dump());
  while (!queue.empty()) {
    Assignment asg = queue.front();
    queue.pop_front();
    const json here = describe(asg);
    for (int p = 1; p <= k; ++p) {
      for (Element x = 0; x < a.size(); ++x) {
        const json mv = {p, a.name(x)};
        auto it = table.find(json{here, mv}.dump());
        if (it == table.end()) return "no response at " + here.dump() + " for move " + mv.dump();
        auto y = b.find(it->second);
        if (!y) return "unknown response " + it->second;
        Assignment next = asg;
        next[p - 1] = std::pair{x, *y};
        PartialMap pairs;
        for (const auto& slot : next)
          if (slot) pairs.push_back(*slot);
        if (!is_relational_partial_hom(pairs, a, b))
          return "assignment " + describe(next).dump() + " is not a partial homomorphism";
        if (seen.insert(describe(next).dump()).second) queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace gcomonad
