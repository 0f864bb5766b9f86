#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace mobiuslab {

/// Matching that saturates every left vertex of a bipartite graph, by
/// augmenting paths. adj[i] lists the right neighbours of left vertex i.
/// Returns the partner of each left vertex, or nullopt when none exists.
std::optional<std::vector<std::size_t>> saturating_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& adj);

}  // namespace mobiuslab
