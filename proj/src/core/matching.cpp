#include "core/matching.hpp"

namespace mobiuslab {

namespace {

struct Kuhn {
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<std::size_t> owner;  // right -> left, or npos
  std::vector<std::size_t> stamp;
  std::size_t round = 0;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool augment(std::size_t v) {
    for (auto w : adj[v]) {
      if (stamp[w] == round) continue;
      stamp[w] = round;
      if (owner[w] == npos || augment(owner[w])) {
        owner[w] = v;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> saturating_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& adj) {
  Kuhn k{adj, std::vector<std::size_t>(right_count, Kuhn::npos), std::vector<std::size_t>(right_count, 0)};
  for (std::size_t v = 0; v < adj.size(); ++v) {
    ++k.round;
    if (!k.augment(v)) return std::nullopt;
  }
  std::vector<std::size_t> partner(adj.size());
  for (std::size_t w = 0; w < right_count; ++w)
    if (k.owner[w] != Kuhn::npos) partner[k.owner[w]] = w;
  return partner;
}

}  // namespace mobiuslab
