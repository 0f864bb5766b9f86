#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/integer.hpp"
#include "core/poset.hpp"

// Reference computations by exhaustive enumeration. They read only the order
// relation of a Poset and the edge list of a Graph.
namespace mobiuslab::oracle {

/// mu(a,b) as the reduced Euler characteristic of the open interval (a,b):
/// every subset of the interval is tested for being a chain. Open intervals
/// of at most 20 elements.
Integer mobius(const Poset& p, std::size_t a, std::size_t b);

/// counts[k] = number of chains with k+1 elements, by testing every subset.
/// At most 20 elements.
std::vector<Integer> chain_counts(const Poset& p);

/// Permutations of n points without fixed points, by listing them. n <= 10.
Integer derangements(unsigned n);

/// Permutations of n points with exactly k cycles, by listing them. n <= 9.
Integer permutations_with_cycles(unsigned n, unsigned k);

/// Proper colourings with k colours, by trying every assignment.
Integer count_colourings(const Graph& g, unsigned k);

/// Chromatic polynomial by deletion-contraction, ascending coefficients.
std::vector<Integer> chromatic_by_deletion_contraction(const Graph& g);

/// All-pairs path lengths by breadth-first search from every vertex.
std::vector<std::vector<std::size_t>> graph_distances(const Graph& g);

/// Moebius function of the partition lattice between two set partitions of
/// 1..n written as block labels ("12|3"): the product over blocks of b of
/// (-1)^{m-1} (m-1)!, m the number of blocks of c inside it. Zero when c does
/// not refine b.
Integer partition_mobius(const std::string& c, const std::string& b, std::size_t n);

/// Determinant by cofactor expansion over all permutations. At most 8x8.
Integer permutation_determinant(const std::vector<std::vector<Integer>>& m);

}  // namespace mobiuslab::oracle
