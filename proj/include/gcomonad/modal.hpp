#pragma once

// The modal comonad M_k on pointed Kripke structures: unary relations are
// propositions, binary relations are labelled transitions. Plays are paths
// [a0, R1, a1, ..., Rj, aj] from the point with j <= k.

#include <optional>
#include <string>
#include <vector>

#include "gcomonad/game.hpp"
#include "gcomonad/json_io.hpp"
#include "gcomonad/structure.hpp"

namespace gcomonad {

inline constexpr std::size_t kDefaultUnfoldCap = 200'000;

/// A structure read as a Kripke structure. Throws StructureError
/// ("arity violation ...") if some relation has arity above 2.
class KripkeView {
 public:
  explicit KripkeView(const Structure& s);

  const Structure& structure() const { return *s_; }
  std::size_t size() const { return s_->size(); }

  /// Relation indices of the binary and unary symbols.
  const std::vector<std::size_t>& labels() const { return labels_; }
  const std::vector<std::size_t>& props() const { return props_; }

  /// Successors under relation index rel (binary), ascending.
  const std::vector<Element>& successors(std::size_t rel, Element w) const { return succ_[rel][w]; }
  bool prop(std::size_t rel, Element w) const { return s_->holds(rel, std::span(&w, 1)); }

  bool props_equal(Element a, const KripkeView& other, Element b) const;
  bool props_included(Element a, const KripkeView& other, Element b) const;

 private:
  const Structure* s_;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> props_;
  std::vector<std::vector<std::vector<Element>>> succ_;  // [rel][world]
};

/// The plays of M_k (A, a) as a tree of nodes; node 0 is the root play [a].
class ModalUniverse {
 public:
  struct Node {
    std::size_t parent = npos;
    std::size_t label = 0;  // relation index of the last transition
    Element world = 0;
    int depth = 0;
  };
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ModalUniverse(const KripkeView& a, Element point, int k, std::size_t cap = kDefaultUnfoldCap);

  std::size_t size() const { return nodes_.size(); }
  int k() const { return k_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  std::optional<std::size_t> child(std::size_t i, std::size_t label, Element w) const;

  /// ["a", "R", "b", ...]
  json play_json(const Structure& a, std::size_t i) const;

 private:
  int k_;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::size_t>> children_;
};

struct ModalMaterialized {
  ModalUniverse universe;
  PointedStructure structure;  // point = the root play
};

/// Unravelling of (A, a) to depth k. Unary P holds of s iff P holds of its
/// last world; R(s, t) iff t = s[R, a'].
ModalMaterialized modal_unfold(const PointedStructure& p, int k, std::size_t cap = kDefaultUnfoldCap);

/// Coextension of f : M_k(A,a) -> B (a table over the nodes of src) into the
/// unfolding of (B, f[a]) given as target. f* [a] = [f[a]] and
/// f*(s[R, a']) = f*(s)[R, f(s[R, a'])]. Throws StructureError when f is not
/// a morphism (some step has no matching transition in B).
std::vector<std::size_t> modal_coextend_table(const ModalUniverse& src, std::span<const Element> f,
                                              const ModalUniverse& target);

std::vector<Element> modal_counit_table(const ModalUniverse& u);

/// Relations levels[j] (j = 0..k) as |A| x |B| boolean matrices flattened
/// row-major. Level 0 compares propositions only.
std::vector<std::vector<char>> simulation_levels(const Structure& a, const Structure& b, int k);
std::vector<std::vector<char>> bisim_levels(const Structure& a, const Structure& b, int k);

bool simulation_approx(const PointedStructure& p, const PointedStructure& q, int k);
bool bisim_approx(const PointedStructure& p, const PointedStructure& q, int k);

/// Class of every world of A (first |A| entries) and B (next |B|) after k
/// rounds of refinement on the disjoint union.
std::vector<int> graded_classes(const Structure& a, const Structure& b, int k);
bool graded_bisim_approx(const PointedStructure& p, const PointedStructure& q, int k);

/// Round-bounded simulation (left only) or bisimulation game on worlds.
class ModalArena {
 public:
  enum class Mode { simulation, bisimulation };

  struct Position {
    Element a = 0;
    Element b = 0;
    int depth = 0;
  };

  ModalArena(const PointedStructure& p, const PointedStructure& q, int k, Mode mode);

  std::optional<Position> root() const;
  std::vector<Side> sides() const;
  std::vector<Step> moves(const Position& p, Side s) const;
  std::vector<Step> replies(const Position& p, Side s, const Step& mv) const;
  std::optional<Position> advance(const Position& p, Side s, const Step& mv, const Step& reply) const;
  Tuple key(const Position& p) const { return {p.a, p.b, static_cast<Element>(p.depth)}; }
  json describe(const Position& p) const;
  json describe_step(Side s, const Step& st) const;

 private:
  bool matches(Element a, Element b) const;

  const PointedStructure& p_;
  const PointedStructure& q_;
  KripkeView va_, vb_;
  int k_;
  Mode mode_;
};

struct GradedGameResult {
  bool duplicator_wins = false;
  /// {"kind": "modal-graded", "k": k, "rounds": [{"position": [a, b],
  ///  "round": d, "label": R, "bijection": [[a', b'], ...]}]}; null on NO.
  json certificate;
};

/// k-round graded bisimulation game. Duplicator's bijection on successor sets
/// is found as a perfect matching over winning successor pairs.
GradedGameResult graded_bisim_game(const PointedStructure& p, const PointedStructure& q, int k);

/// Replays a graded-game certificate: every reached position has a bijection
/// per label, and every pair it produces agrees on propositions.
std::optional<std::string> verify_graded_certificate(const PointedStructure& p, const PointedStructure& q, int k,
                                                     const json& cert);

/// Height of the submodel generated by the point if it is a synchronization
/// tree (every reachable world has a unique path from the point), else none.
std::optional<int> modal_depth(const PointedStructure& p);

/// Worlds reachable from the point, in breadth-first order.
std::vector<Element> reachable_worlds(const KripkeView& v, Element point);

void require_modal_k(int k);

}  // namespace gcomonad
