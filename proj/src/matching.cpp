#include "gcomonad/matching.hpp"

#include <limits>

namespace gcomonad {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool augment(std::size_t u, const std::vector<std::vector<char>>& adj, std::vector<char>& visited,
             std::vector<std::size_t>& match_right) {
  for (std::size_t v = 0; v < adj[u].size(); ++v) {
    if (!adj[u][v] || visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] == kNone || augment(match_right[v], adj, visited, match_right)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> perfect_matching(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  for (const auto& row : adj)
    if (row.size() != n) return std::nullopt;
  std::vector<std::size_t> match_right(n, kNone);
  std::vector<char> visited(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(u, adj, visited, match_right)) return std::nullopt;
  }
  std::vector<std::size_t> match_left(n);
  for (std::size_t v = 0; v < n; ++v) match_left[match_right[v]] = v;
  return match_left;
}

}  // namespace gcomonad
