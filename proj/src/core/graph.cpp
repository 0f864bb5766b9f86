#include "core/graph.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace mobiuslab {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& e : edges) {
    if (e.first == e.second)
      throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(e.first));
    if (e.first >= n || e.second >= n)
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(e.first) + " " + std::to_string(e.second) + " out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw Error(ErrorCode::InvalidArgument,
                "repeated edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  edges_ = std::move(edges);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(),
                            Edge{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(n_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::size_t> Graph::components() const {
  std::vector<std::size_t> root(n_);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [u, v] : edges_) {
    auto a = find(u), b = find(v);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(n_), id(n_, n_);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    auto r = find(x);
    if (id[r] == n_) id[r] = next++;
    label[x] = id[r];
  }
  return label;
}

std::size_t Graph::component_count() const {
  auto c = components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Graph complete_graph(std::size_t n) {
  std::vector<Graph::Edge> e;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Graph::Edge> e;
  for (std::uint32_t u = 0; u < n; ++u) e.emplace_back(u, static_cast<std::uint32_t>((u + 1) % n));
  return Graph(n, std::move(e));
}

Graph path_graph(std::size_t n) {
  std::vector<Graph::Edge> e;
  for (std::uint32_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph star_graph(std::size_t k) {
  std::vector<Graph::Edge> e;
  for (std::uint32_t v = 1; v <= k; ++v) e.emplace_back(0, v);
  return Graph(k + 1, std::move(e));
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

std::vector<Graph> all_graphs(std::size_t n) {
  if (n > 6) throw Error(ErrorCode::SizeGuard, "all_graphs: n must be at most 6");
  std::vector<Graph::Edge> slots;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Graph::Edge> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) e.push_back(slots[i]);
    out.emplace_back(n, std::move(e));
  }
  return out;
}

Graph named_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "graph name must look like 'complete:4'");
  const std::string kind = spec.substr(0, colon);
  std::size_t n = 0;
  try {
    n = std::stoul(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad size in graph name '" + spec + "'");
  }
  if (kind == "complete") return complete_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "path") return path_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "empty") return empty_graph(n);
  throw Error(ErrorCode::InvalidArgument, "unknown graph family '" + kind + "'");
}

}  // namespace mobiuslab
