#include <doctest.h>

#include "fixtures.hpp"
#include "gcomonad/homomorphism.hpp"
#include "gcomonad/lawcheck.hpp"
#include "gcomonad/modal.hpp"
#include "oracles.hpp"

using namespace gcomonad;

namespace {

const auto kLoop = fx::kripke(1, {{0, 0}});
const auto kTwoCycle = fx::kripke(2, {{0, 1}, {1, 0}});
const auto kSingle = fx::kripke(1, {});

bool oracle_sim(const PointedStructure& p, const PointedStructure& q, int k) {
  return oracle::simulates(oracle::Kripke(p.base), p.point, oracle::Kripke(q.base), q.point, k);
}
bool oracle_bisim(const PointedStructure& p, const PointedStructure& q, int k) {
  return oracle::bisimilar(oracle::Kripke(p.base), p.point, oracle::Kripke(q.base), q.point, k);
}
bool oracle_graded(const PointedStructure& p, const PointedStructure& q, int k) {
  return oracle::graded(oracle::Kripke(p.base), p.point, oracle::Kripke(q.base), q.point, k);
}

}  // namespace

TEST_CASE("arity above two is rejected") {
  const Structure t = StructureBuilder({{"T", 3}}).elements({"a"}).tuple("T", {"a", "a", "a"}).build();
  CHECK_THROWS_WITH_AS(KripkeView{t}, doctest::Contains("arity violation"), StructureError);
  CHECK_THROWS_AS(modal_unfold(PointedStructure{t, 0}, 1), StructureError);
  CHECK_THROWS_AS(simulation_approx(kLoop, kLoop, 0), StructureError);
}

TEST_CASE("unfolding") {
  const auto u = modal_unfold(kLoop, 2);
  CHECK(u.structure.base.size() == 3);
  CHECK(u.structure.point == 0);
  CHECK(u.structure.base.relation("R").size() == 2);
  CHECK(u.universe.play_json(kLoop.base, 2) == json::array({"v0", "R", "v0", "R", "v0"}));

  CHECK(modal_unfold(kSingle, 3).structure.base.size() == 1);
  const auto c = modal_unfold(kTwoCycle, 1);
  CHECK(c.structure.base.size() == 2);
  CHECK(c.structure.base.relation("R").size() == 1);
  CHECK(c.universe.play_json(kTwoCycle.base, 1) == json::array({"v0", "R", "v1"}));

  CHECK_THROWS_AS(modal_unfold(fx::kripke(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 10, 100), CapacityError);

  StructureGenerator gen(31);
  for (int i = 0; i < 40; ++i) {
    const auto p = gen.kripke(4, 0.3);
    const int k = 1 + static_cast<int>(gen.below(3));
    const auto m = modal_unfold(p, k);
    const auto d = modal_depth(m.structure);
    REQUIRE(d);
    CHECK(*d <= k);
    for (std::size_t n = 0; n < m.universe.size(); ++n) {
      const Element w = m.universe.node(n).world;
      for (std::size_t r = 0; r < p.base.signature().size(); ++r)
        if (p.base.signature()[r].arity == 1)
          CHECK(m.structure.base.holds(r, Tuple{static_cast<Element>(n)}) == p.base.holds(r, Tuple{w}));
    }
    CHECK(modal_counit_table(m.universe)[0] == p.point);
  }
}

TEST_CASE("simulation approximants") {
  const auto chain1 = fx::kripke(2, {{0, 1}});
  for (int k = 1; k <= 4; ++k) {
    CHECK(simulation_approx(chain1, kLoop, k));
    CHECK(simulation_approx(kSingle, kLoop, k));
  }
  CHECK(simulation_approx(kLoop, chain1, 1));
  CHECK_FALSE(simulation_approx(kLoop, chain1, 2));
  CHECK(simulation_approx(kLoop, kLoop, 3));
}

TEST_CASE("bisimulation approximants") {
  for (int k = 1; k <= 5; ++k) CHECK(bisim_approx(kLoop, kTwoCycle, k));
  const auto fork = fx::kripke(3, {{0, 1}, {0, 2}}, {1});
  const auto chain = fx::kripke(2, {{0, 1}}, {1});
  CHECK_FALSE(bisim_approx(fork, chain, 1));
  CHECK(oracle_bisim(fork, chain, 1) == bisim_approx(fork, chain, 1));
  const auto fork2 = fx::kripke(3, {{0, 1}, {0, 2}}, {1, 2});
  CHECK(bisim_approx(fork2, chain, 1));
}

TEST_CASE("graded bisimulation") {
  const auto two = fx::kripke(3, {{0, 1}, {0, 2}});
  const auto one = fx::kripke(2, {{0, 1}});
  CHECK_FALSE(graded_bisim_approx(two, one, 1));
  CHECK(bisim_approx(two, one, 1));
  CHECK_FALSE(graded_bisim_game(two, one, 1).duplicator_wins);
  for (int k = 1; k <= 4; ++k) CHECK(graded_bisim_approx(kLoop, kTwoCycle, k));
  const auto g = graded_bisim_game(kLoop, kTwoCycle, 3);
  CHECK(g.duplicator_wins);
  CHECK_FALSE(verify_graded_certificate(kLoop, kTwoCycle, 3, g.certificate));
}

TEST_CASE("approximants agree with the inductive definitions") {
  StructureGenerator gen(1234);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.kripke(4, 0.3);
    const auto q = gen.kripke(4, 0.3);
    const int k = 1 + static_cast<int>(gen.below(3));
    const bool sim = simulation_approx(p, q, k);
    CHECK(sim == oracle_sim(p, q, k));
    CHECK(bisim_approx(p, q, k) == oracle_bisim(p, q, k));
    CHECK(graded_bisim_approx(p, q, k) == oracle_graded(p, q, k));
    CHECK(graded_bisim_game(p, q, k).duplicator_wins == graded_bisim_approx(p, q, k));
    CHECK(sim == find_pointed_homomorphism(modal_unfold(p, k).structure, q).has_value());
    if (graded_bisim_approx(p, q, k)) CHECK(bisim_approx(p, q, k));
    if (bisim_approx(p, q, k)) CHECK((sim && simulation_approx(q, p, k)));
    CHECK(bisim_approx(p, q, k) == bisim_approx(q, p, k));
    CHECK(graded_bisim_approx(p, q, k) == graded_bisim_approx(q, p, k));
    CHECK(simulation_approx(p, p, k));
  }
}

TEST_CASE("simulation is transitive") {
  StructureGenerator gen(99);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.kripke(3, 0.4), q = gen.kripke(3, 0.4), r = gen.kripke(3, 0.4);
    const int k = 1 + static_cast<int>(gen.below(3));
    if (simulation_approx(p, q, k) && simulation_approx(q, r, k)) CHECK(simulation_approx(p, r, k));
  }
}

TEST_CASE("graded certificates") {
  StructureGenerator gen(4321);
  int yes = 0;
  for (int i = 0; i < 300; ++i) {
    const auto p = gen.kripke(3, 0.3);
    const auto q = gen.chance(0.5) ? p : gen.kripke(3, 0.3);
    const int k = 1 + static_cast<int>(gen.below(3));
    const auto g = graded_bisim_game(p, q, k);
    if (!g.duplicator_wins) {
      CHECK(g.certificate.is_null());
      continue;
    }
    ++yes;
    CHECK_FALSE(verify_graded_certificate(p, q, k, g.certificate));
    json tampered = g.certificate;
    bool changed = false;
    for (auto& round : tampered["rounds"])
      if (round["bijection"].size() >= 1 && !changed) {
        round["bijection"].erase(0);
        changed = true;
      }
    if (changed) CHECK(verify_graded_certificate(p, q, k, tampered));
  }
  CHECK(yes > 50);
}

TEST_CASE("modal depth") {
  CHECK(modal_depth(kSingle) == std::optional<int>(0));
  CHECK_FALSE(modal_depth(kLoop));
  CHECK(modal_depth(fx::kripke(3, {{0, 1}, {1, 2}})) == std::optional<int>(2));
  CHECK_FALSE(modal_depth(fx::kripke(3, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK(modal_depth(fx::kripke(3, {{0, 1}, {2, 1}}, {}, 0)) == std::optional<int>(1));
}
