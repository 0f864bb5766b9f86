#include <doctest.h>

#include "core/error.hpp"
#include "core/instances.hpp"
#include "core/tree_distance.hpp"
#include "oracles/oracles.hpp"

using namespace mobiuslab;

TEST_CASE("BFS order puts the root first and children in increasing order") {
  const auto t = RootedTree::from_parents({std::nullopt, 0, 0, 1});
  CHECK(t.root() == 0);
  CHECK(t.order() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(t.children(0) == std::vector<std::size_t>{1, 2});
  CHECK(tree_zeta(t).is_upper_triangular());
}

TEST_CASE("malformed parent arrays are rejected") {
  CHECK_THROWS_AS(RootedTree::from_parents({std::nullopt, std::nullopt}), Error);
  CHECK_THROWS_AS(RootedTree::from_parents({1, 0}), Error);
}

TEST_CASE("distance matrix matches BFS distances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_tree(7, seed);
    const auto t = RootedTree::from_graph(g, 0);
    const auto d = distance_matrix(t);
    const auto bfs = oracle::graph_distances(g);
    for (std::size_t u = 0; u < 7; ++u)
      for (std::size_t v = 0; v < 7; ++v)
        CHECK(d(t.position(u), t.position(v)) == static_cast<long>(bfs[u][v]));
  }
}

TEST_CASE("distance determinant depends only on n") {
  CHECK(graham_pollak_det(RootedTree::from_graph(path_graph(6), 0)).det == -80);
  CHECK(graham_pollak_det(RootedTree::from_graph(star_graph(5), 0)).det == -80);
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto t = RootedTree::from_graph(random_tree(n, n), 0);
    const auto gp = graham_pollak_det(t);
    CHECK(gp.pass);
    CHECK(gp.det == oracle::permutation_determinant([&] {
            const auto d = distance_matrix(t);
            std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j) m[i][j] = d(i, j);
            return m;
          }()));
  }
}

TEST_CASE("factorization and inverse identities") {
  const auto t = RootedTree::from_graph(random_tree(8, 3), 0);
  CHECK(tree_zeta_inverse_check(t).pass);
  CHECK(graham_lovasz_check(t).pass);
  CHECK(distance_inverse_check(t).pass);
  CHECK(h_determinant_check(6).pass);
}
