#pragma once

// Generic solver for round-bounded model-comparison games played by covering
// steps. An arena describes positions, the steps Spoiler may take on each
// side, Duplicator's candidate replies, and the winning set (advance() yields
// nothing when the new position falls outside it).
//
// Arena requirements:
//   using Position = ...;
//   std::optional<Position> root() const;           // nullopt: Duplicator loses at once
//   std::vector<Side> sides() const;                // {left} for existential games
//   std::vector<Step> moves(const Position&, Side) const;
//   std::vector<Step> replies(const Position&, Side, const Step&) const;
//   std::optional<Position> advance(const Position&, Side, const Step& move,
//                                   const Step& reply) const;
//   Tuple key(const Position&) const;               // identifies equivalent positions
//   json describe(const Position&) const;
//   json describe_step(Side, const Step&) const;    // Side = where the step is played

#include <concepts>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gcomonad/json_io.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

enum class Side { left, right };

inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// One covering step: for plain plays the label is 0; for modal plays it is
/// the binary relation index.
struct Step {
  std::size_t label = 0;
  Element elem = 0;

  bool operator==(const Step&) const = default;
};

template <class A>
concept GameArena = requires(const A& a, const typename A::Position& p, Side s, const Step& st) {
  { a.root() } -> std::same_as<std::optional<typename A::Position>>;
  { a.sides() } -> std::same_as<std::vector<Side>>;
  { a.moves(p, s) } -> std::same_as<std::vector<Step>>;
  { a.replies(p, s, st) } -> std::same_as<std::vector<Step>>;
  { a.advance(p, s, st, st) } -> std::same_as<std::optional<typename A::Position>>;
  { a.key(p) } -> std::same_as<Tuple>;
  { a.describe(p) } -> std::same_as<json>;
  { a.describe_step(s, st) } -> std::same_as<json>;
};

template <GameArena Arena>
class BoundedGameSolver {
 public:
  using Position = typename Arena::Position;

  struct Reply {
    Step step;
    Position next;
  };

  explicit BoundedGameSolver(const Arena& arena) : arena_(arena) {}

  bool duplicator_wins() {
    auto r = arena_.root();
    return r && wins(*r);
  }

  bool wins(const Position& pos) {
    Tuple k = arena_.key(pos);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    bool result = true;
    for (Side side : arena_.sides()) {
      for (const Step& mv : arena_.moves(pos, side)) {
        if (!reply(pos, side, mv)) {
          result = false;
          break;
        }
      }
      if (!result) break;
    }
    memo_.emplace(std::move(k), result);
    return result;
  }

  /// Least winning reply in the arena's reply order.
  std::optional<Reply> reply(const Position& pos, Side side, const Step& mv) {
    for (const Step& r : arena_.replies(pos, side, mv)) {
      auto next = arena_.advance(pos, side, mv, r);
      if (next && wins(*next)) return Reply{r, std::move(*next)};
    }
    return std::nullopt;
  }

  /// Winning strategy restricted to positions reachable under it, as a list of
  /// {"position", "side", "move", "reply"} entries. Requires duplicator_wins().
  json strategy() {
    json out = json::array();
    auto r = arena_.root();
    if (!r || !wins(*r)) return out;
    std::unordered_set<Tuple, TupleHash, TupleEq> seen;
    std::vector<Position> stack{*r};
    seen.insert(arena_.key(*r));
    while (!stack.empty()) {
      Position pos = std::move(stack.back());
      stack.pop_back();
      for (Side side : arena_.sides()) {
        for (const Step& mv : arena_.moves(pos, side)) {
          auto rep = reply(pos, side, mv);
          out.push_back({{"position", arena_.describe(pos)},
                         {"side", side_name(side)},
                         {"move", arena_.describe_step(side, mv)},
                         {"reply", arena_.describe_step(other(side), rep->step)}});
          if (seen.insert(arena_.key(rep->next)).second) stack.push_back(std::move(rep->next));
        }
      }
    }
    return out;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const Arena& arena_;
  std::unordered_map<Tuple, bool, TupleHash, TupleEq> memo_;
};

/// Replays a strategy produced by BoundedGameSolver::strategy() against the
/// arena: every Spoiler move at every reached position must have an entry,
/// and every reply must keep the play inside the winning set. Returns a
/// diagnostic on failure.
template <GameArena Arena>
std::optional<std::string> verify_strategy(const Arena& arena, const json& entries) {
  using Position = typename Arena::Position;
  if (!entries.is_array()) return "strategy must be an array";
  std::unordered_map<std::string, json> table;
  for (const auto& e : entries) {
    if (!e.is_object() || !e.contains("position") || !e.contains("side") || !e.contains("move") ||
        !e.contains("reply"))
      return "malformed strategy entry";
    json k = {e["position"], e["side"], e["move"]};
    table[k.dump()] = e["reply"];
  }
  auto root = arena.root();
  if (!root) return "initial position is not winning";
  std::unordered_set<Tuple, TupleHash, TupleEq> seen{arena.key(*root)};
  std::vector<Position> stack{*root};
  while (!stack.empty()) {
    Position pos = std::move(stack.back());
    stack.pop_back();
    for (Side side : arena.sides()) {
      for (const Step& mv : arena.moves(pos, side)) {
        json k = {arena.describe(pos), side_name(side), arena.describe_step(side, mv)};
        auto it = table.find(k.dump());
        if (it == table.end()) return "no response for " + k.dump();
        std::optional<Position> next;
        for (const Step& r : arena.replies(pos, side, mv)) {
          if (arena.describe_step(other(side), r) == it->second) {
            next = arena.advance(pos, side, mv, r);
            if (!next) return "response leaves the winning set at " + k.dump();
            break;
          }
        }
        if (!next) return "invalid response at " + k.dump();
        if (seen.insert(arena.key(*next)).second) stack.push_back(std::move(*next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace gcomonad
