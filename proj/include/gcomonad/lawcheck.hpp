#pragma once

// Randomized checks of the comonad laws and of the game/homomorphism
// correspondences on small generated structures.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcomonad/json_io.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

struct GenConfig {
  std::size_t max_size = 4;
  int max_arity = 3;
  double density = 0.3;
  std::uint64_t seed = 0;
  std::size_t iterations = 200;
  int max_k = 3;
};

/// Deterministic for a given generator state. Uses raw engine output only,
/// so sequences do not depend on the standard library's distributions.
class StructureGenerator {
 public:
  explicit StructureGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  /// True with probability p (exactly never for p <= 0, always for p >= 1).
  bool chance(double p);

  Signature signature(int max_arity);
  Structure structure(const Signature& sig, std::size_t size, double density);
  Structure structure(const GenConfig& cfg);
  /// Signature {P/1, Q/1, R/2, S/2} with a random point.
  PointedStructure kripke(std::size_t max_worlds, double density);

 private:
  std::mt19937_64 rng_;
};

Structure random_structure(const GenConfig& cfg);

enum class Fault { none, counit_first };

struct LawFailure {
  std::string law;
  std::string comonad;
  int k = 0;
  std::size_t iteration = 0;
  std::string detail;
  json instance;  // the shrunken source structure
};

struct LawReport {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::size_t checks = 0;
  std::vector<std::string> lines;
  std::optional<LawFailure> failure;

  bool passed() const { return !failure; }
  std::string text() const;
  json summary() const;
};

/// Per iteration: the three Kleisli equations for E_k and M_k (materialized)
/// and P_k (plays of length <= 3), covering preservation of coextension, the
/// coequaliser parallel-pair equation where G G A is small, and on small
/// instances the existential-game, simulation and tier-order cross-checks.
/// Stops at the first failure, shrinking the source structure by removing
/// tuples, then elements, then lowering k.
LawReport run_law_suite(const GenConfig& cfg, Fault fault = Fault::none);

}  // namespace gcomonad
