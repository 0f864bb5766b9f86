#include <doctest.h>

#include "core/graph.hpp"
#include "core/instances.hpp"
#include "core/matroid.hpp"
#include "oracles/oracles.hpp"

using namespace mobiuslab;

TEST_CASE("atom matroid of a boolean lattice is free") {
  const auto b3 = boolean_lattice(3);
  AtomMatroid m(b3);
  CHECK(m.size() == 3);
  CHECK(independents(m).size() == 8);
  CHECK(circuits(m).empty());
  CHECK(rank_axioms_hold(m));
}

TEST_CASE("K4 contraction lattice has the triangles and 4-cycles as circuits") {
  const auto l = contraction_lattice(complete_graph(4));
  AtomMatroid m(l);
  CHECK(m.size() == 6);
  CHECK(circuits(m).size() == 7);
  CHECK(rank_axioms_hold(m));
}

TEST_CASE("NBC face counts of the partition lattice are Stirling numbers") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto l = partition_lattice(n);
    AtomMatroid m(l);
    std::vector<std::size_t> order(m.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    const auto counts = nbc_counts(m, order);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      CHECK(counts[k] == stirling_first_unsigned(static_cast<unsigned>(n), static_cast<unsigned>(n - k)));
      CHECK(counts[k] == oracle::permutations_with_cycles(static_cast<unsigned>(n), static_cast<unsigned>(n - k)));
    }
    CHECK(nbc_complex_is_pure(m, order));
  }
}

TEST_CASE("characteristic polynomial of B_2(3)") {
  const auto p = characteristic_polynomial(subspace_lattice(2, 3));
  CHECK(p.to_string() == "x^3 - 7x^2 + 14x - 8");
  CHECK(p(Integer(2)) == 0);
}

TEST_CASE("chromatic polynomials agree with deletion-contraction and colouring counts") {
  for (const auto& g : all_graphs(5)) {
    const auto chi = chromatic_polynomial(g);
    CHECK(chi.coefficients() == oracle::chromatic_by_deletion_contraction(g));
    for (unsigned k = 0; k <= 3; ++k) CHECK(chi(Integer(k)) == oracle::count_colourings(g, k));
  }
}

TEST_CASE("chromatic polynomial of small named graphs") {
  CHECK(chromatic_polynomial(cycle_graph(4)).to_string() == "x^4 - 4x^3 + 6x^2 - 3x");
  CHECK(chromatic_polynomial(empty_graph(0)).to_string() == "1");
}

TEST_CASE("codewords of the [3,2] parity code") {
  const std::vector<std::vector<unsigned>> g{{1, 0, 1}, {0, 1, 1}};
  const auto flats = column_flats(g, 2);
  CHECK(flats.height() == 2);
  CHECK(codeword_weight_check(g, 2).pass);
  CHECK(codeword_weight_check(g, 3 - 1, 2).pass);
}
