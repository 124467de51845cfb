#include <doctest.h>

#include "fixtures.hpp"
#include "gcomonad/ef.hpp"
#include "gcomonad/homomorphism.hpp"
#include "gcomonad/lawcheck.hpp"
#include "gcomonad/pebble.hpp"
#include "oracles.hpp"

using namespace gcomonad;

namespace {

bool holds(const Structure& a, std::vector<PebblePlay> plays) { return pebble_relation_holds(a, 0, plays); }

}  // namespace

TEST_CASE("pebble relation conditions") {
  const Structure loop = fx::loop(), edge = fx::edge();
  CHECK(holds(loop, {{{1, 0}}, {{1, 0}}}));
  CHECK_FALSE(holds(edge, {{{1, 0}}, {{1, 0}, {1, 1}}}));
  CHECK(holds(edge, {{{1, 0}}, {{1, 0}, {2, 1}}}));
  CHECK_FALSE(holds(edge, {{{1, 0}}, {{2, 1}}}));  // incomparable
  CHECK_FALSE(holds(edge, {{{1, 0}, {2, 1}}, {{1, 0}}}));
  CHECK_FALSE(holds(edge, {{{1, 1}}, {{1, 1}, {2, 0}}}));  // R(b, a) fails
}

TEST_CASE("pebble truncation") {
  const auto m = pebble_truncate(fx::loop(), 1, 1);
  CHECK(m.structure.size() == 1);
  CHECK(m.structure.relation(0).size() == 1);
  CHECK(pebble_truncate(fx::edge(), 2, 2).structure.size() == 20);
  CHECK(pebble_universe_size(2, 2, 2) == 20);
  CHECK_THROWS_AS(pebble_truncate(fx::clique(3), 3, 3, 100), CapacityError);

  // Length-one plays are pairwise incomparable unless equal.
  const Structure e = fx::edge();
  const auto m1 = pebble_truncate(e, 2, 1);
  CHECK(m1.structure.size() == 4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const PebblePlay s = m1.universe.play(x), t = m1.universe.play(y);
      const bool expect = s == t && e.holds(0, Tuple{s[0].elem, t[0].elem});
      CHECK(m1.structure.holds(0, Tuple{static_cast<Element>(x), static_cast<Element>(y)}) == expect);
    }
}

TEST_CASE("pebble coextension") {
  PebbleStrategyFn constant = [](std::span<const PebbleMove>) -> std::optional<Element> { return 5; };
  CHECK(pebble_coextend(constant, PebblePlay{{1, 0}, {2, 1}}) == PebblePlay{{1, 5}, {2, 5}});
  PebbleStrategyFn last = [](std::span<const PebbleMove> s) -> std::optional<Element> { return s.back().elem; };
  CHECK(pebble_coextend(last, PebblePlay{{2, 1}, {1, 0}, {2, 0}}) == PebblePlay{{2, 1}, {1, 0}, {2, 0}});
  PebbleStrategyFn through = [](std::span<const PebbleMove> s) -> std::optional<Element> { return 1 - s.back().elem; };
  CHECK(pebble_coextend(through, PebblePlay{{1, 0}, {2, 1}}) == PebblePlay{{1, 1}, {2, 0}});
  PebbleStrategyFn partial = [](std::span<const PebbleMove> s) -> std::optional<Element> {
    if (s.size() > 1) return std::nullopt;
    return 0;
  };
  CHECK_THROWS_AS(pebble_coextend(partial, PebblePlay{{1, 0}, {2, 1}}), StructureError);
}

TEST_CASE("pebble universe indexing is a bijection") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (int k = 1; k <= 2; ++k) {
      const PebbleUniverse u(n, k, 3);
      for (std::size_t i = 0; i < u.size(); ++i) CHECK(u.index(u.play(i)) == i);
    }
}

TEST_CASE("existential pebble game fixtures") {
  CHECK(pebble_game_exists(fx::clique(3), fx::clique(3), 2).duplicator_wins);
  // Two pebbles cannot expose the odd cycle; three can.
  CHECK(pebble_game_exists(fx::clique(3), fx::clique(2), 2).duplicator_wins);
  CHECK_FALSE(pebble_game_exists(fx::clique(3), fx::clique(2), 3).duplicator_wins);
  CHECK_FALSE(pebble_game_exists(fx::cycle(5), fx::clique(2), 3).duplicator_wins);
  CHECK(pebble_game_exists(fx::cycle(5), fx::clique(2), 2).duplicator_wins);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = n; m <= 5; ++m)
      for (int k = 1; k <= 3; ++k) CHECK(pebble_game_exists(fx::lin(n), fx::lin(m), k).duplicator_wins);
  CHECK_FALSE(pebble_game_exists(fx::lin(3), fx::lin(2), 2).duplicator_wins);
}

TEST_CASE("existential pebble game properties") {
  StructureGenerator gen(515);
  for (int i = 0; i < 150; ++i) {
    const Signature sig = gen.signature(2);
    const Structure a = gen.structure(sig, 1 + gen.below(3), 0.35);
    const Structure b = gen.structure(sig, 1 + gen.below(3), 0.45);
    const int k = 1 + static_cast<int>(gen.below(3));
    const auto res = pebble_game_exists(a, b, k);
    const bool hom = oracle::hom_exists(a, b);
    if (hom) CHECK(res.duplicator_wins);
    if (res.duplicator_wins) CHECK(ef_game_exists(a, b, k).duplicator_wins);
    if (pebble_game_exists(a, b, k + 1).duplicator_wins) CHECK(res.duplicator_wins);
    if (static_cast<std::size_t>(k) >= a.size()) CHECK(res.duplicator_wins == hom);
    if (res.duplicator_wins && !res.certificate.is_null()) CHECK_FALSE(verify_pebble_certificate(a, b, k, res.certificate));
  }
}

TEST_CASE("pebble certificate verifier rejects a losing strategy") {
  const Structure a = fx::lin(2), b = fx::lin(3);
  const auto res = pebble_game_exists(a, b, 2);
  REQUIRE(res.duplicator_wins);
  REQUIRE(!res.certificate.is_null());
  CHECK_FALSE(verify_pebble_certificate(a, b, 2, res.certificate));
  json bad = res.certificate;
  for (auto& e : bad["strategy"]) e["response"] = "v0";
  CHECK(verify_pebble_certificate(a, b, 2, bad));
  json partial = res.certificate;
  partial["strategy"] = json::array({partial["strategy"][0]});
  CHECK(verify_pebble_certificate(a, b, 2, partial));
}
