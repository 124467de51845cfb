#pragma once

// The Ehrenfeucht-Fraisse comonad E_k: plays are non-empty sequences of at
// most k elements; relations hold of pairwise prefix-comparable plays whose
// last elements are related in the base structure.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcomonad/game.hpp"
#include "gcomonad/json_io.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

inline constexpr std::size_t kDefaultPlayCap = 200'000;

using EfPlay = std::vector<Element>;

/// Number of plays of length 1..k over n elements, saturating at SIZE_MAX.
std::size_t ef_universe_size(std::size_t n, int k);

bool is_prefix(std::span<const Element> s, std::span<const Element> t);

/// The plays of E_k over an n-element universe. Plays are indexed by length,
/// then lexicographically, so no table is stored.
class EfUniverse {
 public:
  EfUniverse(std::size_t n, int k);

  std::size_t size() const { return offsets_.back(); }
  std::size_t base_size() const { return n_; }
  int k() const { return k_; }

  EfPlay play(std::size_t i) const;
  std::optional<std::size_t> find(std::span<const Element> s) const;
  std::size_t index(std::span<const Element> s) const;

 private:
  std::size_t n_;
  int k_;
  std::vector<std::size_t> offsets_;  // offsets_[len - 1] = first index of length len
};

struct EfMaterialized {
  EfUniverse universe;
  Structure structure;
};

/// Builds E_k A explicitly. Throws CapacityError when the number of plays
/// exceeds cap.
EfMaterialized ef_materialize(const Structure& a, int k, std::size_t cap = kDefaultPlayCap);

/// Play name used in materialized structures and certificates: a JSON array
/// of element names.
std::string ef_play_name(const Structure& a, std::span<const Element> s);

inline Element ef_counit(std::span<const Element> s) { return s.back(); }

/// Relation of E_k A on explicit plays: pairwise prefix-comparable and the
/// base relation holds of the last elements.
bool ef_relation_holds(const Structure& a, std::size_t rel, std::span<const EfPlay> plays);

/// A coKleisli morphism E_k A -> B given by its table over all plays of A.
struct EfCoKleisli {
  EfUniverse universe;
  std::vector<Element> table;

  Element operator()(std::span<const Element> s) const { return table[universe.index(s)]; }
};

/// f*([a1..aj]) = [f[a1], f[a1,a2], ..., f[a1..aj]].
EfPlay ef_coextend(const EfCoKleisli& f, std::span<const Element> s);
/// f* over every play, as indices into the target's plays.
std::vector<std::size_t> ef_coextend_table(const EfCoKleisli& f, const EfUniverse& target);

/// The counit as a coKleisli morphism E_k A -> A.
EfCoKleisli ef_counit_morphism(const EfUniverse& u);

/// True iff s prefix of t with equal last elements implies f(s) = f(t).
bool is_i_morphism(const EfCoKleisli& f);
/// Values on plays whose last element already occurred are copied from the
/// play truncated at that first occurrence; all other values are kept.
EfCoKleisli i_morphism_normalize(const EfCoKleisli& f);

/// Position of an EF game: the set of (left, right) pairs played so far.
class EfArena {
 public:
  enum class Mode { existential, back_and_forth };

  struct Position {
    PartialMap pairs;  // sorted, duplicate-free
    int depth = 0;
  };

  EfArena(const Structure& a, const Structure& b, int k, Mode mode);

  std::optional<Position> root() const { return Position{}; }
  std::vector<Side> sides() const;
  std::vector<Step> moves(const Position& p, Side s) const;
  std::vector<Step> replies(const Position& p, Side s, const Step& mv) const;
  std::optional<Position> advance(const Position& p, Side s, const Step& mv, const Step& reply) const;
  Tuple key(const Position& p) const;
  json describe(const Position& p) const;
  json describe_step(Side s, const Step& st) const;

 private:
  const Structure& a_;
  const Structure& b_;
  int k_;
  Mode mode_;
};

struct EfGameResult {
  bool duplicator_wins = false;
  /// Duplicator's strategy on every Spoiler play; omitted when the play space
  /// exceeds kDefaultPlayCap.
  std::optional<EfCoKleisli> strategy;
};

/// Decides the k-round existential EF game from A to B.
EfGameResult ef_game_exists(const Structure& a, const Structure& b, int k);

/// {"kind": "ef-existential", "k": k, "strategy": [{"play": [...], "response": b}]}
json ef_certificate(const Structure& a, const Structure& b, const EfCoKleisli& f);
/// Replays a certificate: the table must be total on Spoiler plays and every
/// play's induced pairs must form a partial homomorphism.
std::optional<std::string> verify_ef_certificate(const Structure& a, const Structure& b, int k, const json& cert);

}  // namespace gcomonad
