#pragma once

#include <optional>
#include <vector>

namespace gcomonad {

/// Perfect matching in a square bipartite graph given as an adjacency matrix
/// (adj[left][right]). Returns the right partner of each left vertex, or
/// nullopt when none exists.
std::optional<std::vector<std::size_t>> perfect_matching(const std::vector<std::vector<char>>& adj);

}  // namespace gcomonad
