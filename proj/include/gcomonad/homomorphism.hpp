#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gcomonad/structure.hpp"

namespace gcomonad {

/// Total map on a source universe, indexed by source element.
using TotalMap = std::vector<Element>;

/// True iff h maps every tuple of every relation of A into the matching
/// relation of B. Throws StructureError on signature mismatch or a map of the
/// wrong size.
bool is_homomorphism(std::span<const Element> h, const Structure& a, const Structure& b);

struct HomSearchOptions {
  /// Pairs (a, b) that every returned map must contain.
  std::vector<std::pair<Element, Element>> fixed;
  /// When set, values are tried in a seed-determined order instead of
  /// ascending order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Backtracking search with forward checking. Variables are taken in universe
/// order; values in ascending order unless shuffled.
std::optional<TotalMap> find_homomorphism(const Structure& a, const Structure& b,
                                          const HomSearchOptions& opts = {});

/// Pointed variant: the point of A must map to the point of B.
std::optional<TotalMap> find_pointed_homomorphism(const PointedStructure& a, const PointedStructure& b);

}  // namespace gcomonad
