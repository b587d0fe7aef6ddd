#include <random>
#include <vector>

#include "doctest.h"

#include "graphsim/edit_distance.hpp"
#include "graphsim/enumeration.hpp"
#include "graphsim/errors.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace graphsim;

TEST_SUITE("edit_distance") {

TEST_CASE("edit distance of hand-checked pairs") {
  CHECK(ged(builders::path(3), builders::path(3)).ged == 0);
  CHECK(ged(builders::complete(4), builders::complete(4)).ged == 0);

  // P3 -> K3: one edge insertion.
  CHECK(ged(builders::path(3), builders::complete(3)).ged == 1);
  CHECK(s_ged(builders::path(3), builders::complete(3)) == 0.5);

  // K1 -> K2: insert a vertex and an edge.
  CHECK(ged(Graph(1), builders::complete(2)).ged == 2);
  CHECK(s_ged(Graph(1), builders::complete(2)) == 1.0 / 3.0);

  // P3 -> P4: insert a vertex and an edge.
  CHECK(ged(builders::path(3), builders::path(4)).ged == 2);

  // K2 -> K3: insert a vertex and its two edges.
  CHECK(ged(builders::complete(2), builders::complete(3)).ged == 3);

  // Isomorphic but differently labeled graphs.
  std::mt19937_64 rng(47);
  const Graph g = oracles::random_connected_graph(rng, 6);
  CHECK(ged(g, oracles::random_relabeling(g, rng)).ged == 0);
  CHECK(s_ged(g, oracles::random_relabeling(g, rng)) == 1.0);
}

TEST_CASE("witness realizes the reported distance") {
  std::mt19937_64 rng(53);
  const std::vector<Graph> t7 = enumerate_trees(7);
  for (std::size_t i = 0; i < t7.size(); ++i) {
    for (std::size_t j = i; j < t7.size(); ++j) {
      const EditDistanceResult r = ged(t7[i], t7[j]);
      CHECK(mapping_cost(t7[i], t7[j], r.witness) == r.ged);
    }
  }
  // Unequal orders, both directions.
  for (int trial = 0; trial < 30; ++trial) {
    const Graph a =
        oracles::random_connected_graph(rng, 2 + static_cast<int>(rng() % 5));
    const Graph b =
        oracles::random_connected_graph(rng, 2 + static_cast<int>(rng() % 5));
    const EditDistanceResult r = ged(a, b);
    CHECK(static_cast<int>(r.witness.size()) == a.vertex_count());
    CHECK(mapping_cost(a, b, r.witness) == r.ged);
  }
}

TEST_CASE("mapping_cost validates its witness") {
  const Graph p3 = builders::path(3);
  const Graph k3 = builders::complete(3);
  const std::vector<int> short_witness = {0, 1};
  CHECK_THROWS_AS(mapping_cost(p3, k3, short_witness), InputError);
  const std::vector<int> out_of_range = {0, 1, 3};
  CHECK_THROWS_AS(mapping_cost(p3, k3, out_of_range), InputError);
  const std::vector<int> not_injective = {0, 1, 1};
  CHECK_THROWS_AS(mapping_cost(p3, k3, not_injective), InputError);

  // The identity on P3 vs K3 realizes exactly the one missing edge.
  const std::vector<int> identity = {0, 1, 2};
  CHECK(mapping_cost(p3, k3, identity) == 1);
  // Deleting every vertex rebuilds K3 from scratch: 3 deletions + 2 edge
  // deletions + 3 insertions + 3 edge insertions.
  const std::vector<int> all_deleted = {-1, -1, -1};
  CHECK(mapping_cost(p3, k3, all_deleted) == 11);
}

TEST_CASE("symmetric and zero exactly on isomorphic pairs over N5") {
  const std::vector<Graph> n5 = enumerate_connected_graphs(5);
  REQUIRE(n5.size() == 21);
  for (std::size_t i = 0; i < n5.size(); ++i) {
    for (std::size_t j = i; j < n5.size(); ++j) {
      const int d_ij = ged(n5[i], n5[j]).ged;
      const int d_ji = ged(n5[j], n5[i]).ged;
      CHECK(d_ij == d_ji);
      CHECK((d_ij == 0) == (i == j)); // family members are pairwise non-isomorphic
    }
  }
}

TEST_CASE("triangle inequality on random triples") {
  std::mt19937_64 rng(59);
  std::vector<Graph> pool;
  for (int i = 0; i < 60; ++i) {
    pool.push_back(
        oracles::random_connected_graph(rng, 3 + static_cast<int>(rng() % 4)));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const Graph& a = pool[rng() % pool.size()];
    const Graph& b = pool[rng() % pool.size()];
    const Graph& c = pool[rng() % pool.size()];
    const int ab = ged(a, b).ged;
    const int bc = ged(b, c).ged;
    const int ac = ged(a, c).ged;
    CHECK(ac <= ab + bc);
  }
}

TEST_CASE("equal-order distances match the bijection oracle") {
  const std::vector<Graph> t7 = enumerate_trees(7);
  for (std::size_t i = 0; i < t7.size(); ++i) {
    for (std::size_t j = i + 1; j < t7.size(); ++j) {
      CHECK(ged(t7[i], t7[j]).ged ==
            oracles::ged_bijection_oracle(t7[i], t7[j]));
    }
  }
  const std::vector<Graph> n4 = enumerate_connected_graphs(4);
  for (const Graph& a : n4) {
    for (const Graph& b : n4) {
      CHECK(ged(a, b).ged == oracles::ged_bijection_oracle(a, b));
    }
  }
}

TEST_CASE("distances match the unrestricted partial-injection oracle") {
  // Covers unequal orders and proves that restricting equal-order search
  // to bijections loses nothing at this scale.
  std::vector<Graph> small;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) small.push_back(g);
  }
  REQUIRE(small.size() == 31); // 1 + 1 + 2 + 6 + 21
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      CHECK(ged(small[i], small[j]).ged ==
            oracles::ged_partial_injection_oracle(small[i], small[j]));
    }
  }
}

TEST_CASE("budget and connectivity errors") {
  const Graph big = builders::path(11);
  CHECK_THROWS_AS(ged(big, big), BudgetError);
  CHECK_THROWS_AS(ged(builders::path(3), big), BudgetError);
  CHECK_THROWS_AS(ged(Graph(2), builders::path(3)), InputError);
  CHECK_THROWS_AS(ged(builders::path(3), Graph(2)), InputError);
  CHECK_NOTHROW(ged(builders::path(10), builders::star(10)));
}

} // TEST_SUITE
