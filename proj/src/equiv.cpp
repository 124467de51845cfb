#include "gcomonad/equiv.hpp"

#include <algorithm>
#include <unordered_map>

#include "gcomonad/ef.hpp"
#include "gcomonad/game.hpp"
#include "gcomonad/matching.hpp"
#include "gcomonad/modal.hpp"
#include "gcomonad/pebble.hpp"

namespace gcomonad {

std::string comonad_name(ComonadKind c) {
  switch (c) {
    case ComonadKind::ef: return "ef";
    case ComonadKind::pebble: return "pebble";
    case ComonadKind::modal: return "modal";
  }
  return "?";
}

std::optional<ComonadKind> parse_comonad(std::string_view s) {
  if (s == "ef") return ComonadKind::ef;
  if (s == "pebble") return ComonadKind::pebble;
  if (s == "modal") return ComonadKind::modal;
  return std::nullopt;
}

json Verdict::to_json() const {
  return {{"equiv", equiv}, {"tier", tier}, {"comonad", comonad_name(comonad)}, {"k", k}, {"certificate", certificate}};
}

namespace {

Verdict make(ComonadKind c, int tier, int k) {
  Verdict v;
  v.comonad = c;
  v.tier = tier;
  v.k = k;
  v.certificate = nullptr;
  return v;
}

void require_k(int k) {
  if (k < 1) throw StructureError("k must be >= 1");
}

}  // namespace

Verdict mutual_existential(ComonadKind c, const Structure& a, const Structure& b, int k) {
  require_k(k);
  require_same_signature(a, b);
  Verdict v = make(c, 1, k);
  if (c == ComonadKind::ef) {
    auto fwd = ef_game_exists(a, b, k);
    if (!fwd.duplicator_wins) return v;
    auto bwd = ef_game_exists(b, a, k);
    if (!bwd.duplicator_wins) return v;
    v.equiv = true;
    if (fwd.strategy && bwd.strategy)
      v.certificate = {{"forward", ef_certificate(a, b, *fwd.strategy)}, {"backward", ef_certificate(b, a, *bwd.strategy)}};
    return v;
  }
  if (c == ComonadKind::pebble) {
    auto fwd = pebble_game_exists(a, b, k);
    if (!fwd.duplicator_wins) return v;
    auto bwd = pebble_game_exists(b, a, k);
    if (!bwd.duplicator_wins) return v;
    v.equiv = true;
    if (!fwd.certificate.is_null() && !bwd.certificate.is_null())
      v.certificate = {{"forward", fwd.certificate}, {"backward", bwd.certificate}};
    return v;
  }
  throw StructureError("modal equivalence needs pointed structures");
}

Verdict back_and_forth_equiv(ComonadKind c, const Structure& a, const Structure& b, int k) {
  require_k(k);
  require_same_signature(a, b);
  Verdict v = make(c, 2, k);
  if (c == ComonadKind::ef) {
    EfArena arena(a, b, k, EfArena::Mode::back_and_forth);
    BoundedGameSolver solver(arena);
    v.equiv = solver.duplicator_wins();
    if (v.equiv) v.certificate = {{"kind", "ef-back-and-forth"}, {"k", k}, {"strategy", solver.strategy()}};
    return v;
  }
  if (c == ComonadKind::pebble) {
    auto r = solve_pebble_game(a, b, k, PebbleGameKind::back_and_forth);
    v.equiv = r.duplicator_wins;
    v.certificate = r.certificate;
    return v;
  }
  throw StructureError("modal equivalence needs pointed structures");
}

namespace {

// Bijection game: Duplicator picks a bijection A -> B, Spoiler picks a in A,
// and (a, psi(a)) joins the position, which must stay a partial isomorphism.
class BijectionGame {
 public:
  BijectionGame(const Structure& a, const Structure& b, int k) : a_(a), b_(b), k_(k) {}

  bool wins(const PartialMap& pairs, int depth) {
    if (depth >= k_) return true;
    Tuple key{static_cast<Element>(depth)};
    for (auto [x, y] : pairs) {
      key.push_back(x);
      key.push_back(y);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t n = a_.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        PartialMap next = extend(pairs, x, y);
        adj[x][y] = is_partial_isomorphism(next, a_, b_) && wins(next, depth + 1);
      }
    const bool ok = perfect_matching(adj).has_value();
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  static PartialMap extend(const PartialMap& pairs, Element x, Element y) {
    PartialMap next = pairs;
    const std::pair<Element, Element> pr{x, y};
    auto it = std::lower_bound(next.begin(), next.end(), pr);
    if (it == next.end() || *it != pr) next.insert(it, pr);
    return next;
  }

 private:
  const Structure& a_;
  const Structure& b_;
  int k_;
  std::unordered_map<Tuple, bool, TupleHash, TupleEq> memo_;
};

}  // namespace

Verdict bijection_game_equiv(const Structure& a, const Structure& b, int k) {
  require_k(k);
  require_same_signature(a, b);
  Verdict v = make(ComonadKind::ef, 3, k);
  if (a.size() != b.size()) return v;
  BijectionGame game(a, b, k);
  v.equiv = game.wins({}, 0);
  return v;
}

Verdict pebble_bijection_equiv(const Structure& a, const Structure& b, int k) {
  require_k(k);
  require_same_signature(a, b);
  Verdict v = make(ComonadKind::pebble, 3, k);
  if (a.size() != b.size()) return v;
  v.equiv = solve_pebble_game(a, b, k, PebbleGameKind::bijection).duplicator_wins;
  return v;
}

Verdict modal_equiv(int tier, const PointedStructure& p, const PointedStructure& q, int k) {
  require_modal_k(k);
  require_same_signature(p.base, q.base);
  Verdict v = make(ComonadKind::modal, tier, k);
  if (tier == 1) {
    ModalArena fwd(p, q, k, ModalArena::Mode::simulation);
    ModalArena bwd(q, p, k, ModalArena::Mode::simulation);
    BoundedGameSolver sf(fwd), sb(bwd);
    v.equiv = sf.duplicator_wins() && sb.duplicator_wins();
    if (v.equiv)
      v.certificate = {{"forward", {{"kind", "modal-simulation"}, {"k", k}, {"strategy", sf.strategy()}}},
                       {"backward", {{"kind", "modal-simulation"}, {"k", k}, {"strategy", sb.strategy()}}}};
    return v;
  }
  if (tier == 2) {
    ModalArena arena(p, q, k, ModalArena::Mode::bisimulation);
    BoundedGameSolver solver(arena);
    v.equiv = solver.duplicator_wins();
    if (v.equiv) v.certificate = {{"kind", "modal-bisimulation"}, {"k", k}, {"strategy", solver.strategy()}};
    return v;
  }
  if (tier == 3) {
    auto r = graded_bisim_game(p, q, k);
    v.equiv = r.duplicator_wins;
    v.certificate = r.certificate;
    return v;
  }
  throw StructureError("tier must be 1, 2 or 3");
}

Verdict decide_equivalence(ComonadKind c, int tier, const LoadedStructure& a, const LoadedStructure& b, int k) {
  if (tier < 1 || tier > 3) throw StructureError("tier must be 1, 2 or 3");
  if (c == ComonadKind::modal) return modal_equiv(tier, a.pointed(), b.pointed(), k);
  if (tier == 1) return mutual_existential(c, a.structure, b.structure, k);
  if (tier == 2) return back_and_forth_equiv(c, a.structure, b.structure, k);
  return c == ComonadKind::ef ? bijection_game_equiv(a.structure, b.structure, k)
                              : pebble_bijection_equiv(a.structure, b.structure, k);
}

namespace {

// Every f : E_k A -> B in S(A, B), stored as its coextension (play indices
// of E_k B), enumerated play by play with pruning: the pairs along a play
// only depend on f at its prefixes, so a failing prefix prunes the subtree.
std::vector<std::vector<std::size_t>> enumerate_s(const Structure& a, const Structure& b, int k, std::size_t limit) {
  const EfUniverse ua(a.size(), k), ub(b.size(), k);
  std::size_t total = 1;
  for (std::size_t i = 0; i < ua.size(); ++i) {
    if (total > limit / b.size()) throw CapacityError("Theta oracle: too many functions to enumerate", limit + 1);
    total *= b.size();
  }
  // Plays in index order have all proper prefixes earlier (shorter first).
  std::vector<EfPlay> plays(ua.size());
  std::vector<std::size_t> parent(ua.size());
  for (std::size_t i = 0; i < ua.size(); ++i) {
    plays[i] = ua.play(i);
    parent[i] = plays[i].size() > 1 ? ua.index(std::span(plays[i]).first(plays[i].size() - 1)) : ua.size();
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> star(ua.size());
  auto pairs_ok = [&](std::size_t i) {
    PartialMap pm;
    const EfPlay t = ub.play(star[i]);
    for (std::size_t j = 0; j < t.size(); ++j) pm.emplace_back(plays[i][j], t[j]);
    return is_partial_isomorphism(pm, a, b);
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ua.size()) {
      out.push_back(star);
      return;
    }
    for (Element y = 0; y < b.size(); ++y) {
      EfPlay t = parent[i] == ua.size() ? EfPlay{} : ub.play(star[parent[i]]);
      t.push_back(y);
      star[i] = ub.index(t);
      if (pairs_ok(i)) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

ThetaOracle::ThetaOracle(const Structure& a, const Structure& b, int k, std::size_t limit) {
  require_k(k);
  require_same_signature(a, b);
  plays_a_ = ef_universe_size(a.size(), k);
  plays_b_ = ef_universe_size(b.size(), k);
  star_ab_ = enumerate_s(a, b, k, limit);
  star_ba_ = enumerate_s(b, a, k, limit);
}

ThetaOracle::FnSet ThetaOracle::all_ab() const {
  FnSet out(star_ab_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

ThetaOracle::FnSet ThetaOracle::gamma(const FnSet& f) const {
  // img[s * |E_k B| + t]: some f in F has f*(s) = t.
  std::vector<char> img(plays_a_ * plays_b_, 0);
  for (std::size_t fi : f)
    for (std::size_t s = 0; s < plays_a_; ++s) img[s * plays_b_ + star_ab_[fi][s]] = 1;
  FnSet out;
  for (std::size_t gi = 0; gi < star_ba_.size(); ++gi) {
    bool ok = true;
    for (std::size_t t = 0; t < plays_b_ && ok; ++t) ok = img[star_ba_[gi][t] * plays_b_ + t];
    if (ok) out.push_back(gi);
  }
  return out;
}

ThetaOracle::FnSet ThetaOracle::delta(const FnSet& g) const {
  std::vector<char> img(plays_b_ * plays_a_, 0);
  for (std::size_t gi : g)
    for (std::size_t t = 0; t < plays_b_; ++t) img[t * plays_a_ + star_ba_[gi][t]] = 1;
  FnSet out;
  for (std::size_t fi = 0; fi < star_ab_.size(); ++fi) {
    bool ok = true;
    for (std::size_t s = 0; s < plays_a_ && ok; ++s) ok = img[star_ab_[fi][s] * plays_a_ + s];
    if (ok) out.push_back(fi);
  }
  return out;
}

ThetaOracle::FnSet ThetaOracle::greatest_fixpoint() const {
  FnSet cur = all_ab();
  while (true) {
    FnSet next = theta(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace gcomonad
