#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/complex.hpp"
#include "core/graph.hpp"
#include "core/lattice.hpp"
#include "core/poset.hpp"

namespace mobiuslab {

/// C(n): the chain 0 < 1 < ... < n, labels "0".."n".
Poset chain(std::size_t n);

/// B(n): subsets of {1..n}. A subset is labelled by its elements in
/// increasing order, as digits ("", "1", "13") for n <= 9 and comma
/// separated beyond. Element index equals the subset bitmask.
RankedLattice boolean_lattice(std::size_t n);

/// Label of a subset bitmask in boolean_lattice(n).
std::string subset_label(std::uint64_t mask, std::size_t n);

/// Divisors of n ordered by divisibility, labelled in decimal.
Lattice divisor_lattice(std::uint64_t n);

/// B_q(n): subspaces of GF(q)^n ordered by inclusion. A subspace is labelled
/// by the rows of its reduced row echelon basis joined with '|'; the zero
/// subspace is "0".
RankedLattice subspace_lattice(unsigned q, std::size_t n);

/// Gaussian binomial [n choose k]_q.
Integer gaussian_binomial(unsigned q, unsigned n, unsigned k);

/// P(n): set partitions of {1..n} under refinement, the discrete partition
/// at the bottom. Labels list blocks separated by '|' ("12|3").
RankedLattice partition_lattice(std::size_t n);

/// Partitions of the vertex set whose blocks induce connected subgraphs,
/// ordered by refinement. Vertex v appears as v+1 in labels, so the
/// contraction lattice of K_n carries the labels of P(n).
RankedLattice contraction_lattice(const Graph& g);

/// Ranked block structure of a partition label, for callers that need the
/// partition itself: block index per vertex.
std::vector<std::size_t> partition_blocks(const std::string& label, std::size_t n);

/// Random DAG on 0..n-1 (edge i -> j, i < j, with probability density)
/// closed transitively. Deterministic per seed.
Poset random_poset(std::size_t n, double density, std::uint64_t seed);

/// Random labelled tree: uniform parent choices followed by a uniform
/// relabelling of the vertices.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// G(n, p) random graph.
Graph random_graph(std::size_t n, double density, std::uint64_t seed);

/// Random connected graph: G(n, p) samples until one is connected.
Graph random_connected_graph(std::size_t n, double density, std::uint64_t seed);

/// Keeps the elements of rank below k and the top.
RankedLattice truncate(const RankedLattice& l, std::size_t k);

/// Random order-preserving map, built element by element in linear
/// extension order with restarts; falls back to a constant map.
MonotoneMap random_monotone_map(const Poset& source, const Poset& target, std::uint64_t seed);

/// Standard instance by name: "boolean:3", "chain:4", "divisor:12",
/// "subspace:2:3", "partition:4", "contraction:cycle:4", "antichain:2".
Poset named_poset(const std::string& spec);

}  // namespace mobiuslab
