#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mobiuslab {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v, sorted.
class Graph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  Graph() = default;
  /// Throws InvalidArgument on loops, repeated edges or out-of-range ends.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<std::vector<std::size_t>> adjacency() const;

  /// Connected components, as a component index per vertex.
  std::vector<std::size_t> components() const;
  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{1,k}: centre 0, leaves 1..k.
Graph star_graph(std::size_t k);
Graph empty_graph(std::size_t n);

/// Every labelled simple graph on n vertices, n <= 6.
std::vector<Graph> all_graphs(std::size_t n);

/// "complete:4", "cycle:5", "path:3", "star:3", "empty:2".
Graph named_graph(const std::string& spec);

}  // namespace mobiuslab
