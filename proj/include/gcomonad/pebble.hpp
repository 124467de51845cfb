#pragma once

// The pebbling comonad P_k. Its universe (all finite non-empty sequences of
// pebble moves) is infinite, so only length-bounded truncations are ever
// materialized; games are decided over pebble assignments instead.

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcomonad/ef.hpp"
#include "gcomonad/json_io.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

struct PebbleMove {
  int pebble = 1;  // 1..k
  Element elem = 0;

  auto operator<=>(const PebbleMove&) const = default;
};

using PebblePlay = std::vector<PebbleMove>;

std::size_t pebble_universe_size(std::size_t n, int k, int max_len);

/// Conditions for R(s_1..s_n) in P_k A: the plays are pairwise
/// prefix-comparable, the last pebble of each s_i is not reused in its suffix
/// inside any s_j extending s_i, and R holds of the last elements.
bool pebble_relation_holds(const Structure& a, std::size_t rel, std::span<const PebblePlay> plays);

bool is_prefix(std::span<const PebbleMove> s, std::span<const PebbleMove> t);

/// Plays of P_k A of length 1..max_len, indexed by length then
/// lexicographically on (pebble, element).
class PebbleUniverse {
 public:
  PebbleUniverse(std::size_t n, int k, int max_len);

  std::size_t size() const { return offsets_.back(); }
  std::size_t base_size() const { return n_; }
  int k() const { return k_; }
  int max_len() const { return max_len_; }

  PebblePlay play(std::size_t i) const;
  std::optional<std::size_t> find(std::span<const PebbleMove> s) const;
  std::size_t index(std::span<const PebbleMove> s) const;

 private:
  std::size_t n_;
  int k_;
  int max_len_;
  std::vector<std::size_t> offsets_;
};

struct PebbleMaterialized {
  PebbleUniverse universe;
  Structure structure;
};

/// Induced substructure of P_k A on plays of length <= max_len.
PebbleMaterialized pebble_truncate(const Structure& a, int k, int max_len, std::size_t cap = kDefaultPlayCap);

std::string pebble_play_name(const Structure& a, std::span<const PebbleMove> s);

inline Element pebble_counit(std::span<const PebbleMove> s) { return s.back().elem; }

/// A strategy on plays; nullopt where undefined.
using PebbleStrategyFn = std::function<std::optional<Element>(std::span<const PebbleMove>)>;

/// Same pebble indices, elements replaced by f on each prefix. Throws
/// StructureError if f is undefined on some prefix.
PebblePlay pebble_coextend(const PebbleStrategyFn& f, std::span<const PebbleMove> s);

/// A coKleisli map on a truncation, given by its table.
struct PebbleCoKleisli {
  PebbleUniverse universe;
  std::vector<Element> table;

  Element operator()(std::span<const PebbleMove> s) const { return table[universe.index(s)]; }
};

std::vector<std::size_t> pebble_coextend_table(const PebbleCoKleisli& f, const PebbleUniverse& target);
PebbleCoKleisli pebble_counit_morphism(const PebbleUniverse& u);

enum class PebbleGameKind { existential, back_and_forth, bijection };

struct PebbleGameResult {
  bool duplicator_wins = false;
  /// Strategy for the existential and back-and-forth games; null otherwise or
  /// when the reachable strategy is too large to list.
  json certificate;
  /// Number of canonical positions inside the winning set.
  std::size_t positions = 0;
};

/// Greatest-fixpoint decision over pebble assignments. A position survives
/// while it lies in the winning set (partial homomorphism for the existential
/// game, partial isomorphism otherwise) and Duplicator can answer every
/// Spoiler move into a surviving position. For the bijection game Duplicator
/// answers with a bijection, checked as a perfect matching on surviving
/// responses.
PebbleGameResult solve_pebble_game(const Structure& a, const Structure& b, int k, PebbleGameKind kind);

inline PebbleGameResult pebble_game_exists(const Structure& a, const Structure& b, int k) {
  return solve_pebble_game(a, b, k, PebbleGameKind::existential);
}

/// Replays an existential strategy certificate:
///   {"kind": "pebble-existential", "k": k, "strategy":
///     [{"assignment": [[p, a, b], ...], "move": [p, a], "response": b}]}
/// Every Spoiler move at every reached assignment must be answered, and every
/// reached assignment must be a partial homomorphism.
std::optional<std::string> verify_pebble_certificate(const Structure& a, const Structure& b, int k,
                                                     const json& cert);

}  // namespace gcomonad
