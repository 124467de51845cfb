#include "gcomonad/lawcheck.hpp"

#include <functional>
#include <sstream>

#include "gcomonad/ef.hpp"
#include "gcomonad/equiv.hpp"
#include "gcomonad/homomorphism.hpp"
#include "gcomonad/modal.hpp"
#include "gcomonad/pebble.hpp"

namespace gcomonad {

bool StructureGenerator::chance(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
}

Signature StructureGenerator::signature(int max_arity) {
  Signature sig;
  const std::size_t count = 1 + below(2);
  for (std::size_t i = 0; i < count; ++i)
    sig.add("R" + std::to_string(i), 1 + static_cast<int>(below(static_cast<std::size_t>(std::max(1, max_arity)))));
  return sig;
}

Structure StructureGenerator::structure(const Signature& sig, std::size_t size, double density) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                                                        (i >= 26 ? std::to_string(i / 26) : ""));
  std::vector<Relation> rels;
  for (const auto& sym : sig) {
    Relation rel(sym.arity);
    Tuple t(sym.arity, 0);
    while (true) {
      if (chance(density)) rel.insert(t);
      int pos = sym.arity - 1;
      while (pos >= 0 && ++t[pos] == size) t[pos--] = 0;
      if (pos < 0) break;
    }
    rels.push_back(std::move(rel));
  }
  return Structure(sig, std::move(names), std::move(rels));
}

Structure StructureGenerator::structure(const GenConfig& cfg) {
  const Signature sig = signature(cfg.max_arity);
  return structure(sig, 1 + below(std::max<std::size_t>(1, cfg.max_size)), cfg.density);
}

PointedStructure StructureGenerator::kripke(std::size_t max_worlds, double density) {
  const Signature sig{{"P", 1}, {"Q", 1}, {"R", 2}, {"S", 2}};
  Structure s = structure(sig, 1 + below(std::max<std::size_t>(1, max_worlds)), density);
  const Element point = static_cast<Element>(below(s.size()));
  return PointedStructure{std::move(s), point};
}

Structure random_structure(const GenConfig& cfg) {
  StructureGenerator gen(cfg.seed);
  return gen.structure(cfg);
}

std::string LawReport::text() const {
  std::ostringstream out;
  for (const auto& l : lines) out << l << '\n';
  if (failure) {
    out << "FAILED " << failure->law << " [" << failure->comonad << ", k=" << failure->k << ", iteration "
        << failure->iteration << "]: " << failure->detail << '\n';
    out << "counterexample: " << failure->instance.dump() << '\n';
  } else {
    out << "all passed (" << iterations << " iterations, " << checks << " checks)\n";
  }
  return out.str();
}

json LawReport::summary() const {
  json j = {{"seed", seed}, {"iterations", iterations}, {"checks", checks}, {"passed", passed()}};
  if (failure)
    j["failure"] = {{"law", failure->law},
                    {"comonad", failure->comonad},
                    {"k", failure->k},
                    {"iteration", failure->iteration},
                    {"detail", failure->detail},
                    {"instance", failure->instance}};
  else
    j["failure"] = nullptr;
  return j;
}

namespace {

constexpr std::size_t kLawUniverseCap = 5'000;
constexpr std::size_t kCoequaliserCap = 50'000;
constexpr int kPebbleTruncation = 3;

struct Violation {
  std::string law;
  std::string detail;
};
using Check = std::optional<Violation>;

std::vector<Element> random_table(StructureGenerator& gen, std::size_t size, std::size_t range) {
  std::vector<Element> t(size);
  for (auto& x : t) x = static_cast<Element>(gen.below(range));
  return t;
}

Check ef_laws(const Structure& a, const Structure& b, const Structure& c, int k, std::uint64_t seed, Fault fault) {
  if (ef_universe_size(a.size(), k) > kLawUniverseCap) return std::nullopt;
  StructureGenerator gen(seed);
  const EfUniverse ua(a.size(), k), ub(b.size(), k), uc(c.size(), k);
  const EfCoKleisli f{ua, random_table(gen, ua.size(), b.size())};
  const EfCoKleisli g{ub, random_table(gen, ub.size(), c.size())};
  auto counit = [&](const EfPlay& s) { return fault == Fault::counit_first ? s.front() : s.back(); };

  const auto fstar = ef_coextend_table(f, ub);
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (counit(ub.play(fstar[i])) != f.table[i])
      return Violation{"counit after coextension", "at play " + ef_play_name(a, ua.play(i))};

  EfCoKleisli eps{ua, std::vector<Element>(ua.size())};
  for (std::size_t i = 0; i < ua.size(); ++i) eps.table[i] = counit(ua.play(i));
  const auto epsstar = ef_coextend_table(eps, ua);
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (epsstar[i] != i) return Violation{"coextension of counit is identity", "at play " + ef_play_name(a, ua.play(i))};

  EfCoKleisli h{ua, std::vector<Element>(ua.size())};
  for (std::size_t i = 0; i < ua.size(); ++i) h.table[i] = g.table[fstar[i]];
  const auto hstar = ef_coextend_table(h, uc);
  const auto gstar = ef_coextend_table(g, uc);
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (hstar[i] != gstar[fstar[i]])
      return Violation{"coextension of composite", "at play " + ef_play_name(a, ua.play(i))};

  for (std::size_t i = 0; i < ua.size(); ++i) {
    EfPlay s = ua.play(i);
    if (s.size() >= static_cast<std::size_t>(k)) continue;
    const EfPlay fs = ub.play(fstar[i]);
    for (Element x = 0; x < a.size(); ++x) {
      s.push_back(x);
      const EfPlay ft = ub.play(fstar[ua.index(s)]);
      s.pop_back();
      if (ft.size() != fs.size() + 1 || !is_prefix(fs, ft))
        return Violation{"coextension preserves covering", "at play " + ef_play_name(a, s)};
    }
  }

  // The coextension of an actual morphism E_k A -> B is a homomorphism of
  // the materialized structures.
  auto strat = ef_game_exists(a, b, k);
  if (strat.strategy) {
    const auto ea = ef_materialize(a, k), eb = ef_materialize(b, k);
    const auto star = ef_coextend_table(*strat.strategy, ub);
    std::vector<Element> hom(star.begin(), star.end());
    if (!is_homomorphism(hom, ea.structure, eb.structure))
      return Violation{"coextension of a morphism is a homomorphism", "strategy from the existential game"};
  }
  return std::nullopt;
}

Check pebble_laws(const Structure& a, const Structure& b, const Structure& c, int k, std::uint64_t seed, Fault fault) {
  const int len = kPebbleTruncation;
  if (pebble_universe_size(std::max({a.size(), b.size(), c.size()}), k, len) > kLawUniverseCap) return std::nullopt;
  StructureGenerator gen(seed ^ 0x9e3779b97f4a7c15ULL);
  const PebbleUniverse ua(a.size(), k, len), ub(b.size(), k, len), uc(c.size(), k, len);
  const PebbleCoKleisli f{ua, random_table(gen, ua.size(), b.size())};
  const PebbleCoKleisli g{ub, random_table(gen, ub.size(), c.size())};
  auto counit = [&](const PebblePlay& s) { return fault == Fault::counit_first ? s.front().elem : s.back().elem; };

  const auto fstar = pebble_coextend_table(f, ub);
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (counit(ub.play(fstar[i])) != f.table[i])
      return Violation{"counit after coextension", "at play " + pebble_play_name(a, ua.play(i))};

  PebbleCoKleisli eps{ua, std::vector<Element>(ua.size())};
  for (std::size_t i = 0; i < ua.size(); ++i) eps.table[i] = counit(ua.play(i));
  const auto epsstar = pebble_coextend_table(eps, ua);
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (epsstar[i] != i)
      return Violation{"coextension of counit is identity", "at play " + pebble_play_name(a, ua.play(i))};

  PebbleCoKleisli h{ua, std::vector<Element>(ua.size())};
  for (std::size_t i = 0; i < ua.size(); ++i) h.table[i] = g.table[fstar[i]];
  const auto hstar = pebble_coextend_table(h, uc);
  const auto gstar = pebble_coextend_table(g, uc);
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (hstar[i] != gstar[fstar[i]])
      return Violation{"coextension of composite", "at play " + pebble_play_name(a, ua.play(i))};

  for (std::size_t i = 0; i < ua.size(); ++i) {
    PebblePlay s = ua.play(i);
    if (s.size() >= static_cast<std::size_t>(len)) continue;
    const PebblePlay fs = ub.play(fstar[i]);
    for (int p = 1; p <= k; ++p)
      for (Element x = 0; x < a.size(); ++x) {
        s.push_back({p, x});
        const PebblePlay ft = ub.play(fstar[ua.index(s)]);
        s.pop_back();
        if (ft.size() != fs.size() + 1 || !is_prefix(fs, ft))
          return Violation{"coextension preserves covering", "at play " + pebble_play_name(a, s)};
      }
  }
  return std::nullopt;
}

struct ModalMorphism {
  const PointedStructure* target;
  std::vector<Element> table;
};

// A random morphism M_k(A, a) -> B chosen top-down inside the simulation
// approximants, falling back to A itself when no world of B simulates a.
ModalMorphism random_modal_morphism(const ModalUniverse& u, const PointedStructure& src, const PointedStructure& tgt,
                                    int k, StructureGenerator& gen) {
  const auto levels = simulation_levels(src.base, tgt.base, k);
  const std::size_t nb = tgt.base.size();
  std::vector<Element> roots;
  for (Element y = 0; y < nb; ++y)
    if (levels[k][u.node(0).world * nb + y]) roots.push_back(y);
  if (roots.empty()) return random_modal_morphism(u, src, src, k, gen);
  KripkeView vb(tgt.base);
  ModalMorphism m{&tgt, std::vector<Element>(u.size())};
  m.table[0] = roots[gen.below(roots.size())];
  for (std::size_t i = 1; i < u.size(); ++i) {
    const auto& nd = u.node(i);
    std::vector<Element> options;
    for (Element y : vb.successors(nd.label, m.table[nd.parent]))
      if (levels[k - nd.depth][nd.world * nb + y]) options.push_back(y);
    m.table[i] = options[gen.below(options.size())];
  }
  return m;
}

Check modal_laws(const PointedStructure& a, const PointedStructure& b, const PointedStructure& c, int k,
                 std::uint64_t seed, Fault fault) {
  StructureGenerator gen(seed ^ 0x5851f42d4c957f2dULL);
  KripkeView va(a.base);
  const ModalUniverse ua(va, a.point, k, kLawUniverseCap);
  const ModalMorphism f = random_modal_morphism(ua, a, b, k, gen);
  KripkeView vb(f.target->base);
  const ModalUniverse ub(vb, f.table[0], k, kLawUniverseCap);
  const PointedStructure fb{f.target->base, f.table[0]};
  const ModalMorphism g = random_modal_morphism(ub, fb, c, k, gen);
  KripkeView vc(g.target->base);
  const ModalUniverse uc(vc, g.table[0], k, kLawUniverseCap);
  auto counit = [&](const ModalUniverse& u, std::size_t i) {
    return fault == Fault::counit_first ? u.node(0).world : u.node(i).world;
  };
  auto name = [&](std::size_t i) { return ua.play_json(a.base, i).dump(); };

  std::vector<std::size_t> fstar;
  try {
    fstar = modal_coextend_table(ua, f.table, ub);
  } catch (const StructureError& e) {
    return Violation{"coextension of a morphism", e.what()};
  }
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (counit(ub, fstar[i]) != f.table[i]) return Violation{"counit after coextension", "at play " + name(i)};

  std::vector<Element> eps(ua.size());
  for (std::size_t i = 0; i < ua.size(); ++i) eps[i] = counit(ua, i);
  try {
    const auto epsstar = modal_coextend_table(ua, eps, ua);
    for (std::size_t i = 0; i < ua.size(); ++i)
      if (epsstar[i] != i) return Violation{"coextension of counit is identity", "at play " + name(i)};
  } catch (const StructureError& e) {
    return Violation{"coextension of counit is identity", e.what()};
  }

  std::vector<Element> h(ua.size());
  for (std::size_t i = 0; i < ua.size(); ++i) h[i] = g.table[fstar[i]];
  const auto hstar = modal_coextend_table(ua, h, uc);
  const auto gstar = modal_coextend_table(ub, g.table, uc);
  for (std::size_t i = 0; i < ua.size(); ++i)
    if (hstar[i] != gstar[fstar[i]]) return Violation{"coextension of composite", "at play " + name(i)};

  for (std::size_t i = 1; i < ua.size(); ++i)
    if (ub.node(fstar[i]).parent != fstar[ua.node(i).parent] || ub.node(fstar[i]).label != ua.node(i).label)
      return Violation{"coextension preserves covering", "at play " + name(i)};
  return std::nullopt;
}

Check ef_coequaliser(const Structure& a, int k, Fault fault) {
  const std::size_t na = ef_universe_size(a.size(), k);
  if (na > kCoequaliserCap || ef_universe_size(na, k) > kCoequaliserCap) return std::nullopt;
  const EfUniverse ua(a.size(), k), uu(na, k);
  auto counit = [&](const EfPlay& s) { return fault == Fault::counit_first ? s.front() : s.back(); };
  // G eps_A = (eps_A . eps_GA)*, from plays of plays to plays.
  EfCoKleisli t{uu, std::vector<Element>(uu.size())};
  for (std::size_t i = 0; i < uu.size(); ++i) t.table[i] = counit(ua.play(counit(uu.play(i))));
  for (std::size_t i = 0; i < uu.size(); ++i) {
    const EfPlay sigma = uu.play(i);
    const Element lhs = counit(ef_coextend(t, sigma));
    const Element rhs = counit(ua.play(counit(sigma)));
    if (lhs != rhs) return Violation{"coequaliser parallel pair", "at a play of length " + std::to_string(sigma.size())};
  }
  return std::nullopt;
}

Check pebble_coequaliser(const Structure& a, int k, Fault fault) {
  const int len = 2;
  const std::size_t na = pebble_universe_size(a.size(), k, len);
  if (na > kCoequaliserCap || pebble_universe_size(na, k, len) > kCoequaliserCap) return std::nullopt;
  const PebbleUniverse ua(a.size(), k, len), uu(na, k, len);
  auto counit = [&](const PebblePlay& s) { return fault == Fault::counit_first ? s.front().elem : s.back().elem; };
  PebbleCoKleisli t{uu, std::vector<Element>(uu.size())};
  for (std::size_t i = 0; i < uu.size(); ++i) t.table[i] = counit(ua.play(counit(uu.play(i))));
  PebbleStrategyFn fn = [&](std::span<const PebbleMove> s) -> std::optional<Element> { return t(s); };
  for (std::size_t i = 0; i < uu.size(); ++i) {
    const PebblePlay sigma = uu.play(i);
    const Element lhs = counit(pebble_coextend(fn, sigma));
    const Element rhs = counit(ua.play(counit(sigma)));
    if (lhs != rhs) return Violation{"coequaliser parallel pair", "at a play of length " + std::to_string(sigma.size())};
  }
  return std::nullopt;
}

Check modal_coequaliser(const PointedStructure& a, int k, Fault fault) {
  const ModalMaterialized ga = modal_unfold(a, k, kCoequaliserCap);
  KripkeView vga(ga.structure.base);
  std::optional<ModalUniverse> uu;
  try {
    uu.emplace(vga, ga.structure.point, k, kCoequaliserCap);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
  const ModalUniverse& ua = ga.universe;
  auto counit_a = [&](std::size_t i) { return fault == Fault::counit_first ? ua.node(0).world : ua.node(i).world; };
  auto counit_ga = [&](std::size_t i) {
    return fault == Fault::counit_first ? uu->node(0).world : uu->node(i).world;
  };
  std::vector<Element> t(uu->size());
  for (std::size_t i = 0; i < uu->size(); ++i) t[i] = counit_a(counit_ga(i));
  std::vector<std::size_t> g_eps;
  try {
    g_eps = modal_coextend_table(*uu, t, ua);
  } catch (const StructureError& e) {
    return Violation{"coequaliser parallel pair", e.what()};
  }
  for (std::size_t i = 0; i < uu->size(); ++i)
    if (counit_a(g_eps[i]) != counit_a(counit_ga(i)))
      return Violation{"coequaliser parallel pair", "at depth " + std::to_string(uu->node(i).depth)};
  return std::nullopt;
}

Check theorems(const Structure& a, const Structure& b, const PointedStructure& p, const PointedStructure& q, int k) {
  if (a.size() <= 3 && b.size() <= 3 && k <= 2) {
    const bool game = ef_game_exists(a, b, k).duplicator_wins;
    const bool hom = find_homomorphism(ef_materialize(a, k).structure, b).has_value();
    if (game != hom) return Violation{"existential EF game iff homomorphism from E_k A", "game " + std::to_string(game)};
    const bool peb = pebble_game_exists(a, b, k).duplicator_wins;
    if (peb && !game) return Violation{"pebble game implies EF game", ""};
    if (find_homomorphism(a, b) && !peb) return Violation{"homomorphism implies pebble game", ""};
    for (ComonadKind c : {ComonadKind::ef, ComonadKind::pebble}) {
      const bool t1 = mutual_existential(c, a, b, k).equiv;
      const bool t2 = back_and_forth_equiv(c, a, b, k).equiv;
      const bool t3 = c == ComonadKind::ef ? bijection_game_equiv(a, b, k).equiv : pebble_bijection_equiv(a, b, k).equiv;
      if ((t3 && !t2) || (t2 && !t1)) return Violation{"tier ordering", comonad_name(c)};
    }
  }
  const bool sim = simulation_approx(p, q, k);
  const bool hom = find_pointed_homomorphism(modal_unfold(p, k).structure, q).has_value();
  if (sim != hom) return Violation{"simulation iff pointed homomorphism from M_k", "simulation " + std::to_string(sim)};
  const bool t1 = modal_equiv(1, p, q, k).equiv, t2 = modal_equiv(2, p, q, k).equiv, t3 = modal_equiv(3, p, q, k).equiv;
  if ((t3 && !t2) || (t2 && !t1)) return Violation{"tier ordering", "modal"};
  if (t2 != bisim_approx(p, q, k)) return Violation{"bisimulation game iff approximant", ""};
  if (t3 != graded_bisim_approx(p, q, k)) return Violation{"graded game iff approximant", ""};
  return std::nullopt;
}

Structure without_tuple(const Structure& a, std::size_t rel, std::size_t idx) {
  std::vector<Relation> rels;
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    Relation out(a.relation(r).arity());
    const auto& ts = a.relation(r).tuples();
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (r != rel || i != idx) out.insert(ts[i]);
    rels.push_back(std::move(out));
  }
  return Structure(a.signature(), a.names(), std::move(rels));
}

Structure without_element(const Structure& a, Element e) {
  std::vector<std::string> names;
  for (Element x = 0; x < a.size(); ++x)
    if (x != e) names.push_back(a.name(x));
  std::vector<Relation> rels;
  for (const auto& rel : a.relations()) {
    Relation out(rel.arity());
    for (Tuple t : rel.tuples()) {
      if (std::find(t.begin(), t.end(), e) != t.end()) continue;
      for (auto& x : t)
        if (x > e) --x;
      out.insert(std::move(t));
    }
    rels.push_back(std::move(out));
  }
  return Structure(a.signature(), std::move(names), std::move(rels));
}

struct Instance {
  Structure a;
  Element point = 0;
  int k = 1;
};

using FailPredicate = std::function<Check(const Instance&)>;

// Greedy shrinking: tuples, then elements (never the point), then k.
Instance shrink(Instance inst, const FailPredicate& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < inst.a.relations().size() && !progress; ++r)
      for (std::size_t i = 0; i < inst.a.relation(r).size() && !progress; ++i) {
        Instance cand{without_tuple(inst.a, r, i), inst.point, inst.k};
        if (fails(cand)) {
          inst = std::move(cand);
          progress = true;
        }
      }
  }
  for (bool progress = true; progress && inst.a.size() > 1;) {
    progress = false;
    for (Element e = 0; e < inst.a.size() && !progress; ++e) {
      if (e == inst.point || inst.a.size() == 1) continue;
      Instance cand{without_element(inst.a, e), inst.point > e ? inst.point - 1 : inst.point, inst.k};
      if (fails(cand)) {
        inst = std::move(cand);
        progress = true;
      }
    }
  }
  while (inst.k > 1) {
    Instance cand{inst.a, inst.point, inst.k - 1};
    if (!fails(cand)) break;
    inst = std::move(cand);
  }
  return inst;
}

std::uint64_t iteration_seed(std::uint64_t seed, std::size_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

LawReport run_law_suite(const GenConfig& cfg, Fault fault) {
  LawReport report;
  report.seed = cfg.seed;
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    StructureGenerator gen(iteration_seed(cfg.seed, it));
    const int k = 1 + static_cast<int>(gen.below(static_cast<std::size_t>(std::max(1, cfg.max_k))));
    const std::uint64_t law_seed = gen.next();
    const Signature sig = gen.signature(cfg.max_arity);
    auto size = [&] { return 1 + gen.below(std::max<std::size_t>(1, cfg.max_size)); };
    const Structure a = gen.structure(sig, size(), cfg.density);
    const Structure b = gen.structure(sig, size(), cfg.density);
    const Structure c = gen.structure(sig, size(), cfg.density);
    const PointedStructure p = gen.kripke(cfg.max_size, cfg.density);
    const PointedStructure q = gen.kripke(cfg.max_size, cfg.density);
    const PointedStructure r = gen.kripke(cfg.max_size, cfg.density);

    struct Named {
      const char* comonad;
      FailPredicate pred;
      Instance start;
    };
    const std::vector<Named> checks = {
        {"ef", [&](const Instance& in) { return ef_laws(in.a, b, c, in.k, law_seed, fault); }, {a, 0, k}},
        {"pebble", [&](const Instance& in) { return pebble_laws(in.a, b, c, in.k, law_seed, fault); }, {a, 0, k}},
        {"modal",
         [&](const Instance& in) { return modal_laws({in.a, in.point}, q, r, in.k, law_seed, fault); },
         {p.base, p.point, k}},
        {"ef", [&](const Instance& in) { return ef_coequaliser(in.a, in.k, fault); }, {a, 0, k}},
        {"pebble", [&](const Instance& in) { return pebble_coequaliser(in.a, in.k, fault); }, {a, 0, k}},
        {"modal", [&](const Instance& in) { return modal_coequaliser({in.a, in.point}, in.k, fault); },
         {p.base, p.point, k}},
    };
    for (const auto& ch : checks) {
      ++report.checks;
      if (auto v = ch.pred(ch.start)) {
        const FailPredicate same_law = [&](const Instance& in) -> Check {
          auto w = ch.pred(in);
          return w && w->law == v->law ? w : std::nullopt;
        };
        Instance small = shrink(ch.start, same_law);
        auto sv = same_law(small);
        const bool pointed = std::string(ch.comonad) == "modal";
        report.failure = LawFailure{sv->law, ch.comonad, small.k, it, sv->detail,
                                    structure_to_json(small.a, pointed ? std::optional(small.point) : std::nullopt)};
        report.iterations = it + 1;
        report.lines.push_back("iteration " + std::to_string(it) + " k=" + std::to_string(k) + ": " + ch.comonad +
                               " " + v->law + " FAILED");
        return report;
      }
    }
    ++report.checks;
    if (auto v = theorems(a, b, p, q, k)) {
      report.failure = LawFailure{v->law, "cross-check", k, it, v->detail, structure_to_json(a)};
      report.iterations = it + 1;
      report.lines.push_back("iteration " + std::to_string(it) + " k=" + std::to_string(k) + ": " + v->law + " FAILED");
      return report;
    }
    report.lines.push_back("iteration " + std::to_string(it) + " k=" + std::to_string(k) +
                           " |A|=" + std::to_string(a.size()) + " |P|=" + std::to_string(p.base.size()) + ": ok");
  }
  report.iterations = cfg.iterations;
  return report;
}

}  // namespace gcomonad
