#include "oracles/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "core/error.hpp"

namespace mobiuslab::oracle {

namespace {

bool is_chain(const Poset& p, const std::vector<std::size_t>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!p.leq(xs[i], xs[j]) && !p.leq(xs[j], xs[i])) return false;
  return true;
}

std::vector<Integer> subset_chain_counts(const Poset& p, const std::vector<std::size_t>& elements) {
  if (elements.size() > 20) throw Error(ErrorCode::SizeGuard, "oracle: more than 20 elements");
  std::vector<Integer> counts(elements.size() + 1);
  const std::uint32_t total = std::uint32_t{1} << elements.size();
  std::vector<std::size_t> xs;
  for (std::uint32_t s = 1; s < total; ++s) {
    xs.clear();
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (s >> i & 1U) xs.push_back(elements[i]);
    if (is_chain(p, xs)) ++counts[xs.size() - 1];
  }
  return counts;
}

}  // namespace

Integer mobius(const Poset& p, std::size_t a, std::size_t b) {
  if (a == b) return 1;
  if (!p.leq(a, b)) return 0;
  std::vector<std::size_t> open;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (x != a && x != b && p.leq(a, x) && p.leq(x, b)) open.push_back(x);
  // Reduced Euler characteristic: -1 for the empty chain, then alternating.
  Integer chi = -1;
  const auto counts = subset_chain_counts(p, open);
  for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * counts[k];
  return chi;
}

std::vector<Integer> chain_counts(const Poset& p) {
  std::vector<std::size_t> all(p.size());
  std::iota(all.begin(), all.end(), 0);
  auto counts = subset_chain_counts(p, all);
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

Integer derangements(unsigned n) {
  if (n > 10) throw Error(ErrorCode::SizeGuard, "oracle: derangements up to n = 10");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  Integer count = 0;
  do {
    bool fixed = false;
    for (unsigned i = 0; i < n && !fixed; ++i) fixed = perm[i] == i;
    if (!fixed) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Integer permutations_with_cycles(unsigned n, unsigned k) {
  if (n > 9) throw Error(ErrorCode::SizeGuard, "oracle: cycle counts up to n = 9");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  Integer count = 0;
  do {
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    if (cycles == k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Integer count_colourings(const Graph& g, unsigned k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<unsigned> colour(n, 0);
  Integer count = 0;
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges())
      if (colour[u] == colour[v]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    std::size_t pos = 0;
    while (pos < n && ++colour[pos] == k) colour[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

namespace {

using Poly = std::vector<Integer>;
using EdgeSet = std::vector<std::pair<std::size_t, std::size_t>>;

Poly deletion_contraction(std::size_t n, EdgeSet edges) {
  if (edges.empty()) {
    Poly p(n + 1);
    p[n] = 1;
    return p;
  }
  const auto [u, v] = edges.back();
  edges.pop_back();
  Poly deleted = deletion_contraction(n, edges);
  // Contract v into u, then renumber the last vertex into v's slot.
  EdgeSet contracted;
  for (auto [a, b] : edges) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a == n - 1) a = v;
    if (b == n - 1) b = v;
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(contracted.begin(), contracted.end(), std::make_pair(a, b)) == contracted.end())
      contracted.emplace_back(a, b);
  }
  const Poly merged = deletion_contraction(n - 1, contracted);
  for (std::size_t i = 0; i < merged.size(); ++i) deleted[i] -= merged[i];
  return deleted;
}

}  // namespace

std::vector<Integer> chromatic_by_deletion_contraction(const Graph& g) {
  EdgeSet edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(u, v);
  return deletion_contraction(g.vertex_count(), edges);
}

std::vector<std::vector<std::size_t>> graph_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto unreachable = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, unreachable));
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    d[s][s] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x])
        if (d[s][y] == unreachable) {
          d[s][y] = d[s][x] + 1;
          queue.push_back(y);
        }
    }
  }
  return d;
}

namespace {

std::vector<std::size_t> blocks_of(const std::string& label, std::size_t n) {
  std::vector<std::size_t> block(n, n);
  std::size_t current = 0;
  std::size_t number = 0;
  bool in_number = false;
  auto flush = [&] {
    if (!in_number) return;
    if (number < 1 || number > n) throw Error(ErrorCode::InvalidArgument, "oracle: bad partition label " + label);
    block[number - 1] = current;
    number = 0;
    in_number = false;
  };
  for (char ch : label) {
    if (ch == '|') {
      flush();
      ++current;
    } else if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      if (n <= 9) {
        number = static_cast<std::size_t>(ch - '0');
        in_number = true;
        flush();
      } else {
        number = number * 10 + static_cast<std::size_t>(ch - '0');
        in_number = true;
      }
    } else {
      throw Error(ErrorCode::InvalidArgument, "oracle: bad partition label " + label);
    }
  }
  flush();
  for (auto b : block)
    if (b == n) throw Error(ErrorCode::InvalidArgument, "oracle: partition label misses a point: " + label);
  return block;
}

}  // namespace

Integer partition_mobius(const std::string& c, const std::string& b, std::size_t n) {
  const auto cb = blocks_of(c, n), bb = blocks_of(b, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cb[i] == cb[j] && bb[i] != bb[j]) return 0;
  std::map<std::size_t, std::vector<std::size_t>> inside;
  for (std::size_t i = 0; i < n; ++i) {
    auto& v = inside[bb[i]];
    if (std::find(v.begin(), v.end(), cb[i]) == v.end()) v.push_back(cb[i]);
  }
  Integer mu = 1;
  for (const auto& [block, parts] : inside) {
    const auto m = parts.size();
    Integer f = 1;
    for (std::size_t i = 2; i < m; ++i) f *= static_cast<unsigned long>(i);
    mu *= (m % 2 == 1) ? f : Integer(-f);
  }
  return mu;
}

Integer permutation_determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n > 8) throw Error(ErrorCode::SizeGuard, "oracle: permutation determinant up to 8x8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Integer term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace mobiuslab::oracle
