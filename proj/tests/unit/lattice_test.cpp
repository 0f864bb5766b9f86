#include <doctest.h>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/incidence.hpp"
#include "core/instances.hpp"
#include "core/lattice.hpp"
#include "core/lattice_identities.hpp"
#include "oracles/oracles.hpp"

using namespace mobiuslab;

TEST_CASE("lattice recognition") {
  CHECK_THROWS_AS(Lattice::from_poset(Poset::from_covers({"a", "b"}, {})), Error);
  const auto l = boolean_lattice(3);
  CHECK(l.label(l.zero()) == "");
  CHECK(l.label(l.one()) == "123");
  CHECK(l.label(l.join(l.index_of("1"), l.index_of("2"))) == "12");
  CHECK(l.label(l.meet(l.index_of("12"), l.index_of("23"))) == "2");
  CHECK(check_lattice_laws(l));
}

TEST_CASE("Whitney numbers of standard lattices") {
  using V = std::vector<std::size_t>;
  CHECK(whitney_numbers(boolean_lattice(3)) == V{1, 3, 3, 1});
  CHECK(whitney_numbers(subspace_lattice(2, 3)) == V{1, 7, 7, 1});
  CHECK(whitney_numbers(partition_lattice(4)) == V{1, 6, 7, 1});
  CHECK(gaussian_binomial(2, 3, 1) == 7);
}

TEST_CASE("geometry predicates") {
  CHECK(is_geometric(boolean_lattice(4)));
  CHECK(is_geometric(partition_lattice(4)));
  CHECK(is_modular_lattice(subspace_lattice(2, 3)));
  CHECK_FALSE(is_modular_lattice(partition_lattice(4)));
  const auto d12 = RankedLattice::from_lattice(divisor_lattice(12));
  CHECK_FALSE(is_complemented(d12));
  CHECK_FALSE(is_geometric(d12));
  CHECK(is_modular_lattice(d12));
}

TEST_CASE("partition Mobius values match the product formula") {
  const auto l = partition_lattice(5);
  const auto& p = l.poset();
  const auto row = mobius_row(p, l.zero());
  for (std::size_t x = 0; x < l.size(); ++x)
    CHECK(row[x] == oracle::partition_mobius(l.label(l.zero()), l.label(x), 5));
}

TEST_CASE("contraction lattice of K_n is the partition lattice") {
  const auto k4 = contraction_lattice(complete_graph(4));
  CHECK(find_isomorphism(k4.poset(), partition_lattice(4).poset()).has_value());
  const auto forest = contraction_lattice(path_graph(4));
  CHECK(find_isomorphism(forest.poset(), boolean_lattice(3).poset()).has_value());
}

TEST_CASE("identity reports on the boolean lattice") {
  const auto b4 = boolean_lattice(4);
  CHECK(weisner_check(b4, b4.index_of("1")).pass);
  CHECK(dowling_complement_check(b4).pass);
  CHECK(basterfield_kelly_check(b4).pass);
  CHECK(kung_check(b4, 1).pass);
}

TEST_CASE("complement matrix fails its hypothesis on a chain") {
  const auto c = Lattice::from_poset(chain(2));
  CHECK_THROWS_AS(dowling_complement_check(c), Error);
}
