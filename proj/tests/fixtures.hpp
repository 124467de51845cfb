#pragma once

#include <string>
#include <vector>

#include "gcomonad/structure.hpp"

namespace fx {

using gcomonad::PointedStructure;
using gcomonad::Signature;
using gcomonad::Structure;
using gcomonad::StructureBuilder;

inline std::string v(std::size_t i) { return "v" + std::to_string(i); }

inline StructureBuilder vertices(Signature sig, std::size_t n) {
  StructureBuilder b(std::move(sig));
  for (std::size_t i = 0; i < n; ++i) b.element(v(i));
  return b;
}

/// Strict linear order v0 < v1 < ... on n elements.
inline Structure lin(std::size_t n) {
  auto b = vertices({{"R", 2}}, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.tuple("R", {v(i), v(j)});
  return b.build();
}

/// Symmetric irreflexive graph from an edge list.
inline Structure graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  auto b = vertices({{"E", 2}}, n);
  for (auto [x, y] : edges) {
    b.tuple("E", {v(x), v(y)});
    b.tuple("E", {v(y), v(x)});
  }
  return b.build();
}

inline Structure clique(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return graph(n, e);
}

inline Structure path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return graph(n, e);
}

inline Structure cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return graph(n, e);
}

inline Structure empty(std::size_t n) { return vertices({{"E", 2}}, n).build(); }

/// a, b with R = {(a, b)}.
inline Structure edge() { return StructureBuilder({{"R", 2}}).elements({"a", "b"}).tuple("R", {"a", "b"}).build(); }
/// a with R = {(a, a)}.
inline Structure loop() { return StructureBuilder({{"R", 2}}).elements({"a"}).tuple("R", {"a", "a"}).build(); }

/// Kripke structure over {P/1, R/2}.
inline PointedStructure kripke(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& r,
                               const std::vector<std::size_t>& p = {}, std::size_t point = 0) {
  auto b = vertices({{"P", 1}, {"R", 2}}, n);
  for (auto [x, y] : r) b.tuple("R", {v(x), v(y)});
  for (auto x : p) b.tuple("P", {v(x)});
  return PointedStructure{b.build(), static_cast<gcomonad::Element>(point)};
}

}  // namespace fx
