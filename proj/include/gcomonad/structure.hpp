#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gcomonad {

/// Index of an element in a structure's universe (universe order).
using Element = std::uint32_t;
using Tuple = std::vector<Element>;

/// Raised when a structure, signature, or map violates its invariants.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a materialization or exact solver would exceed its size bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::size_t required)
      : std::runtime_error(what), required_(required) {}
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

struct RelationSymbol {
  std::string name;
  int arity = 0;

  bool operator==(const RelationSymbol&) const = default;
};

/// A relational vocabulary. Symbols are kept sorted by name so that two
/// signatures with the same symbols index their relations identically.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<std::pair<std::string, int>> symbols);

  void add(std::string name, int arity);

  std::size_t size() const { return symbols_.size(); }
  const RelationSymbol& operator[](std::size_t i) const { return symbols_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  int max_arity() const;

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<RelationSymbol> symbols_;
};

struct TupleHash {
  using is_transparent = void;
  std::size_t operator()(std::span<const Element> t) const noexcept;
};

struct TupleEq {
  using is_transparent = void;
  bool operator()(std::span<const Element> a, std::span<const Element> b) const noexcept {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Interpretation of one relation symbol: a duplicate-free set of tuples kept
/// in insertion order, with hashed membership.
class Relation {
 public:
  explicit Relation(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }
  const std::vector<Tuple>& tuples() const { return tuples_; }

  /// Returns false if the tuple was already present.
  bool insert(Tuple t);
  bool contains(std::span<const Element> t) const { return index_.contains(t); }

 private:
  int arity_;
  std::vector<Tuple> tuples_;
  std::unordered_set<Tuple, TupleHash, TupleEq> index_;
};

/// A finite, non-empty sigma-structure. Immutable once constructed; the
/// constructor validates every invariant.
class Structure {
 public:
  Structure(Signature sig, std::vector<std::string> universe, std::vector<Relation> relations);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_[e]; }
  std::optional<Element> find(std::string_view name) const;
  /// Like find(), but throws StructureError("unknown element ...").
  Element at(std::string_view name) const;

  const std::vector<Relation>& relations() const { return rels_; }
  const Relation& relation(std::size_t i) const { return rels_[i]; }
  const Relation& relation(std::string_view name) const;

  bool holds(std::size_t rel, std::span<const Element> t) const { return rels_[rel].contains(t); }

 private:
  Signature sig_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> by_name_;
  std::vector<Relation> rels_;
};

/// Builds a structure from names. Used by the JSON reader and by tests.
class StructureBuilder {
 public:
  explicit StructureBuilder(Signature sig);

  StructureBuilder& element(std::string name);
  StructureBuilder& elements(std::initializer_list<std::string> names);
  /// Adds a tuple given by element names; validation is deferred to build().
  StructureBuilder& tuple(std::string_view rel, std::vector<std::string> names);

  Structure build() const;

 private:
  Signature sig_;
  std::vector<std::string> universe_;
  std::vector<std::pair<std::string, std::vector<std::string>>> tuples_;
};

struct PointedStructure {
  Structure base;
  Element point;
};

/// A partial map, as a list of (source, target) pairs. Duplicates are allowed
/// in the list; the predicates below treat it as a set of pairs.
using PartialMap = std::vector<std::pair<Element, Element>>;

/// True iff the pairs are functional, injective, and for every relation and
/// every tuple over the domain, membership is preserved in both directions.
bool is_partial_isomorphism(const PartialMap& p, const Structure& a, const Structure& b);

/// Relational partial homomorphism: every tuple of A whose components all
/// occur as sources of some pair, and every choice of a matching target per
/// component, lands in B. Functionality is not required.
bool is_relational_partial_hom(const PartialMap& p, const Structure& a, const Structure& b);

/// Symmetric irreflexive graph on a universe of indices.
class Graph {
 public:
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::vector<std::vector<std::size_t>> adj_;  // sorted
};

Graph gaifman_graph(const Structure& a);

void require_same_signature(const Structure& a, const Structure& b);

}  // namespace gcomonad
