#include <doctest.h>

#include "fixtures.hpp"
#include "gcomonad/ef.hpp"
#include "gcomonad/equiv.hpp"
#include "gcomonad/lawcheck.hpp"
#include "gcomonad/modal.hpp"
#include "oracles.hpp"

using namespace gcomonad;

TEST_CASE("names of comonads") {
  CHECK(parse_comonad("ef") == ComonadKind::ef);
  CHECK(parse_comonad("pebble") == ComonadKind::pebble);
  CHECK(parse_comonad("modal") == ComonadKind::modal);
  CHECK_FALSE(parse_comonad("other"));
  CHECK(comonad_name(ComonadKind::pebble) == "pebble");
}

TEST_CASE("verdict json shape") {
  const Verdict v = back_and_forth_equiv(ComonadKind::ef, fx::lin(2), fx::lin(2), 2);
  const json j = v.to_json();
  CHECK(j["equiv"] == true);
  CHECK(j["tier"] == 2);
  CHECK(j["comonad"] == "ef");
  CHECK(j["k"] == 2);
  CHECK(j.contains("certificate"));
}

TEST_CASE("mutual existential fixtures") {
  CHECK(mutual_existential(ComonadKind::ef, fx::lin(3), fx::lin(3), 2).equiv);
  const bool forward = ef_game_exists(fx::lin(2), fx::lin(3), 2).duplicator_wins;
  const bool backward = ef_game_exists(fx::lin(3), fx::lin(2), 2).duplicator_wins;
  CHECK(mutual_existential(ComonadKind::ef, fx::lin(2), fx::lin(3), 2).equiv == (forward && backward));
  for (ComonadKind c : {ComonadKind::ef, ComonadKind::pebble}) {
    CHECK(mutual_existential(c, fx::clique(3), fx::clique(2), 2).equiv);
    CHECK_FALSE(mutual_existential(c, fx::clique(3), fx::clique(2), 3).equiv);
  }
  CHECK_THROWS_AS(mutual_existential(ComonadKind::ef, fx::lin(2), fx::lin(2), 0), StructureError);
}

TEST_CASE("EF back-and-forth on linear orders") {
  CHECK(back_and_forth_equiv(ComonadKind::ef, fx::lin(2), fx::lin(3), 1).equiv);
  CHECK_FALSE(back_and_forth_equiv(ComonadKind::ef, fx::lin(2), fx::lin(3), 2).equiv);
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n)
      for (int k = 1; k <= 3; ++k)
        CHECK(back_and_forth_equiv(ComonadKind::ef, fx::lin(m), fx::lin(n), k).equiv ==
              oracle::lin_equiv(static_cast<int>(m), static_cast<int>(n), k));
}

TEST_CASE("EF back-and-forth agrees with the naive game") {
  StructureGenerator gen(61);
  for (int i = 0; i < 150; ++i) {
    const Signature sig = gen.signature(2);
    const Structure a = gen.structure(sig, 1 + gen.below(3), 0.4);
    const Structure b = gen.structure(sig, 1 + gen.below(3), 0.4);
    const int k = 1 + static_cast<int>(gen.below(2));
    const bool v = back_and_forth_equiv(ComonadKind::ef, a, b, k).equiv;
    CHECK(v == oracle::ef_game(a, b, k, true));
    CHECK(v == back_and_forth_equiv(ComonadKind::ef, b, a, k).equiv);
    if (back_and_forth_equiv(ComonadKind::ef, a, b, k + 1).equiv) CHECK(v);
  }
}

TEST_CASE("bijection games") {
  CHECK(bijection_game_equiv(fx::lin(3), fx::lin(3), 3).equiv);
  CHECK_FALSE(bijection_game_equiv(fx::lin(3), fx::lin(4), 1).equiv);
  CHECK_FALSE(pebble_bijection_equiv(fx::empty(2), fx::empty(3), 1).equiv);
  const Structure loop4 = StructureBuilder({{"R", 2}}).elements({"a", "b", "c", "d"}).tuple("R", {"a", "a"}).build();
  const Structure none4 = StructureBuilder({{"R", 2}}).elements({"a", "b", "c", "d"}).build();
  CHECK_FALSE(bijection_game_equiv(loop4, none4, 1).equiv);
  CHECK_FALSE(pebble_bijection_equiv(loop4, none4, 1).equiv);

  // out-degrees {2,0,0} and {1,1,0}
  const Structure d1 = StructureBuilder({{"R", 2}}).elements({"a", "b", "c"}).tuple("R", {"a", "b"}).tuple("R", {"a", "c"}).build();
  const Structure d2 = StructureBuilder({{"R", 2}}).elements({"a", "b", "c"}).tuple("R", {"a", "b"}).tuple("R", {"b", "c"}).build();
  CHECK_FALSE(pebble_bijection_equiv(d1, d2, 2).equiv);
  CHECK(pebble_bijection_equiv(d1, d1, 2).equiv);
}

TEST_CASE("tier ordering on random pairs") {
  StructureGenerator gen(8080);
  for (int i = 0; i < 120; ++i) {
    const Signature sig = gen.signature(2);
    const std::size_t n = 1 + gen.below(3);
    const Structure a = gen.structure(sig, n, 0.4);
    const Structure b = gen.chance(0.5) ? gen.structure(sig, n, 0.4) : gen.structure(sig, 1 + gen.below(3), 0.4);
    const int k = 1 + static_cast<int>(gen.below(2));
    for (ComonadKind c : {ComonadKind::ef, ComonadKind::pebble}) {
      const bool t1 = mutual_existential(c, a, b, k).equiv;
      const bool t2 = back_and_forth_equiv(c, a, b, k).equiv;
      const bool t3 = c == ComonadKind::ef ? bijection_game_equiv(a, b, k).equiv : pebble_bijection_equiv(a, b, k).equiv;
      if (t3) CHECK(t2);
      if (t2) CHECK(t1);
    }
    CHECK(back_and_forth_equiv(ComonadKind::pebble, a, a, k).equiv);
    CHECK(pebble_bijection_equiv(a, a, k).equiv);
    CHECK(bijection_game_equiv(a, a, k).equiv);
  }
}

TEST_CASE("modal tiers") {
  const auto loop = fx::kripke(1, {{0, 0}});
  const auto cycle = fx::kripke(2, {{0, 1}, {1, 0}});
  for (int k = 1; k <= 3; ++k) CHECK(modal_equiv(2, loop, cycle, k).equiv);
  StructureGenerator gen(66);
  for (int i = 0; i < 150; ++i) {
    const auto p = gen.kripke(4, 0.3), q = gen.kripke(4, 0.3);
    const int k = 1 + static_cast<int>(gen.below(3));
    const bool t1 = modal_equiv(1, p, q, k).equiv, t2 = modal_equiv(2, p, q, k).equiv, t3 = modal_equiv(3, p, q, k).equiv;
    CHECK(t1 == (simulation_approx(p, q, k) && simulation_approx(q, p, k)));
    CHECK(t2 == bisim_approx(p, q, k));
    CHECK(t3 == graded_bisim_approx(p, q, k));
  }
  CHECK_THROWS_AS(mutual_existential(ComonadKind::modal, loop.base, cycle.base, 1), StructureError);
}

TEST_CASE("decide_equivalence dispatch") {
  const LoadedStructure a{fx::lin(2), std::nullopt}, b{fx::lin(3), std::nullopt};
  CHECK_FALSE(decide_equivalence(ComonadKind::ef, 2, a, b, 2).equiv);
  CHECK(decide_equivalence(ComonadKind::ef, 2, a, a, 2).equiv);
  CHECK_THROWS_AS(decide_equivalence(ComonadKind::modal, 1, a, b, 2), StructureError);
  CHECK_THROWS_AS(decide_equivalence(ComonadKind::ef, 4, a, b, 2), StructureError);
}

TEST_CASE("theta oracle") {
  const ThetaOracle same(fx::lin(1), fx::lin(1), 1);
  CHECK(same.decide());
  CHECK(same.theta({}).empty());
  const ThetaOracle lin(fx::lin(2), fx::lin(3), 2);
  CHECK_FALSE(lin.decide());
  CHECK(ThetaOracle(fx::lin(2), fx::lin(3), 1).decide());
  CHECK_THROWS_AS(ThetaOracle(fx::lin(4), fx::lin(4), 3, 1000), CapacityError);

  StructureGenerator gen(12);
  for (int i = 0; i < 60; ++i) {
    const Signature sig = gen.signature(2);
    const Structure a = gen.structure(sig, 1 + gen.below(2), 0.5);
    const Structure b = gen.structure(sig, 1 + gen.below(2), 0.5);
    const int k = 1 + static_cast<int>(gen.below(2));
    const ThetaOracle t(a, b, k);
    CHECK(t.decide() == back_and_forth_equiv(ComonadKind::ef, a, b, k).equiv);
    const auto fix = t.greatest_fixpoint();
    CHECK(t.theta(fix) == fix);
    const auto all = t.all_ab();
    const auto once = t.theta(all);
    CHECK(std::includes(all.begin(), all.end(), once.begin(), once.end()));
  }
}
