#include <doctest.h>

#include "gcomonad/lawcheck.hpp"

using namespace gcomonad;

TEST_CASE("default law suite passes") {
  const LawReport r = run_law_suite(GenConfig{});
  CHECK(r.passed());
  CHECK(r.iterations == 200);
  CHECK(r.text().find("all passed") != std::string::npos);
  CHECK(r.summary()["passed"] == true);
  CHECK(r.summary()["failure"].is_null());
}

TEST_CASE("law suite across seeds") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.iterations = 100;
    const LawReport r = run_law_suite(cfg);
    CHECK_MESSAGE(r.passed(), r.text());
  }
}

TEST_CASE("injected counit fault is caught and shrunk") {
  const LawReport r = run_law_suite(GenConfig{}, Fault::counit_first);
  REQUIRE_FALSE(r.passed());
  CHECK((r.failure->law == "counit after coextension" || r.failure->law == "coextension of counit is identity"));
  CHECK(r.failure->k >= 2);
  const json inst = r.failure->instance;
  CHECK(inst["universe"].size() <= 2);
  for (const auto& [name, tuples] : inst["relations"].items()) CHECK(tuples.empty());
  CHECK(r.text().find("FAILED") != std::string::npos);
  CHECK(r.summary()["passed"] == false);
}

TEST_CASE("k = 1 degenerate suite passes") {
  GenConfig cfg;
  cfg.max_k = 1;
  cfg.iterations = 100;
  CHECK(run_law_suite(cfg).passed());
}

TEST_CASE("reports are deterministic per seed") {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.iterations = 50;
  CHECK(run_law_suite(cfg).text() == run_law_suite(cfg).text());
  cfg.iterations = 0;
  const LawReport empty = run_law_suite(cfg);
  CHECK(empty.passed());
  CHECK(empty.checks == 0);
}
