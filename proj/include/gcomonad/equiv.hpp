#pragma once

// Three tiers of equivalence per comonad:
//   1  mutual existential (coKleisli morphisms both ways)
//   2  back-and-forth game over the comonad's winning set
//   3  bijection-style games (coKleisli isomorphism)

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcomonad/json_io.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

enum class ComonadKind { ef, pebble, modal };

std::string comonad_name(ComonadKind c);
std::optional<ComonadKind> parse_comonad(std::string_view s);

struct Verdict {
  bool equiv = false;
  int tier = 1;
  ComonadKind comonad = ComonadKind::ef;
  int k = 1;
  json certificate;  // null when none is produced

  json to_json() const;
};

/// Tier 1 for EF and pebble.
Verdict mutual_existential(ComonadKind c, const Structure& a, const Structure& b, int k);
/// Tier 2 for EF (k-round game, partial isomorphism of played pairs) and
/// pebble (unbounded game over pebble assignments).
Verdict back_and_forth_equiv(ComonadKind c, const Structure& a, const Structure& b, int k);
/// EF tier 3: the k-round bijection game.
Verdict bijection_game_equiv(const Structure& a, const Structure& b, int k);
/// Pebble tier 3: the k-pebble bijection game.
Verdict pebble_bijection_equiv(const Structure& a, const Structure& b, int k);

/// Modal tiers: 1 mutual simulation, 2 bisimulation game, 3 graded game.
Verdict modal_equiv(int tier, const PointedStructure& p, const PointedStructure& q, int k);

/// Dispatch used by the command line. Modal inputs must carry points.
Verdict decide_equivalence(ComonadKind c, int tier, const LoadedStructure& a, const LoadedStructure& b, int k);

/// Brute-force greatest fixpoint of Theta = Delta . Gamma over S(A, B) for
/// E_k, where S(A, B) is every f : E_k A -> B with (s, f*(s)) a partial
/// isomorphism for all plays s.
class ThetaOracle {
 public:
  /// A set of functions, as indices into s_ab() or s_ba().
  using FnSet = std::vector<std::size_t>;

  /// Throws CapacityError when |B|^|E_k A| or |A|^|E_k B| exceeds limit.
  ThetaOracle(const Structure& a, const Structure& b, int k, std::size_t limit = 1'000'000);

  std::size_t s_ab_size() const { return star_ab_.size(); }
  std::size_t s_ba_size() const { return star_ba_.size(); }
  FnSet all_ab() const;

  FnSet gamma(const FnSet& f) const;
  FnSet delta(const FnSet& g) const;
  FnSet theta(const FnSet& f) const { return delta(gamma(f)); }

  /// Greatest fixpoint by the descending sequence S, Theta(S), ...
  FnSet greatest_fixpoint() const;
  bool decide() const { return !greatest_fixpoint().empty(); }

 private:
  // For each function in S, its coextension as play indices.
  std::vector<std::vector<std::size_t>> star_ab_, star_ba_;
  std::size_t plays_a_ = 0, plays_b_ = 0;
};

}  // namespace gcomonad
