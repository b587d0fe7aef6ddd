#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "graphsim/enumeration.hpp"
#include "graphsim/errors.hpp"
#include "graphsim/indices.hpp"
#include "graphsim/spectral.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace graphsim;

namespace {

bool close_rel(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

} // namespace

TEST_SUITE("indices") {

TEST_CASE("index names and set layouts") {
  CHECK(index_name(IndexId::Harary) == "harary");
  CHECK(index_name(IndexId::Sombor) == "sombor");
  CHECK(index_name(IndexId::DegreeDistance) == "degree_distance");
  CHECK(index_name(IndexId::Gutman) == "gutman");
  CHECK(index_name(IndexId::Energy) == "energy");
  CHECK(index_name(IndexId::Estrada) == "estrada");
  CHECK(index_name(IndexId::FirstZagreb) == "first_zagreb");
  CHECK(index_name(IndexId::Randic) == "randic");
  CHECK(index_name(IndexId::ResolventEnergy) == "resolvent_energy");
  CHECK(index_name(IndexId::Wiener) == "wiener");

  // The core set is a prefix of the extended set.
  for (std::size_t i = 0; i < kCoreIndices.size(); ++i) {
    CHECK(kCoreIndices[i] == kExtendedIndices[i]);
  }
}

TEST_CASE("Harary index") {
  CHECK(harary(Graph(1)) == 0.0);
  CHECK(harary(builders::path(3)) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(harary(builders::complete(3)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("Sombor index") {
  CHECK(sombor(builders::complete(2)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sombor(builders::path(3)) ==
        doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(sombor(builders::complete(3)) ==
        doctest::Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("degree distance") {
  CHECK(degree_distance(builders::complete(2)) == doctest::Approx(2.0));
  CHECK(degree_distance(builders::path(3)) == doctest::Approx(10.0));
  CHECK(degree_distance(builders::complete(3)) == doctest::Approx(12.0));
}

TEST_CASE("Gutman index") {
  CHECK(gutman(builders::complete(2)) == doctest::Approx(1.0));
  CHECK(gutman(builders::path(3)) == doctest::Approx(6.0));
  CHECK(gutman(builders::complete(3)) == doctest::Approx(12.0));
}

TEST_CASE("first Zagreb index") {
  CHECK(first_zagreb(builders::complete(2)) == doctest::Approx(2.0));
  CHECK(first_zagreb(builders::path(3)) == doctest::Approx(6.0));
  CHECK(first_zagreb(builders::complete(3)) == doctest::Approx(12.0));
}

TEST_CASE("Randic index") {
  CHECK(randic(builders::complete(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(randic(builders::path(3)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(randic(builders::complete(3)) ==
        doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("Wiener index") {
  CHECK(wiener(builders::complete(2)) == doctest::Approx(1.0));
  CHECK(wiener(builders::path(3)) == doctest::Approx(4.0));
  CHECK(wiener(builders::path(4)) == doctest::Approx(10.0));
}

TEST_CASE("compute_vector assembles the fixed order") {
  const IndexVector p3 = compute_vector(builders::path(3), IndexSet::Core);
  REQUIRE(p3.size() == 6);
  CHECK(p3.ids == std::vector<IndexId>(kCoreIndices.begin(),
                                       kCoreIndices.end()));
  CHECK(p3.values[0] == doctest::Approx(2.5));
  CHECK(p3.values[1] == doctest::Approx(4.472136).epsilon(1e-6));
  CHECK(p3.values[2] == doctest::Approx(10.0));
  CHECK(p3.values[3] == doctest::Approx(6.0));
  CHECK(p3.values[4] == doctest::Approx(2.828427).epsilon(1e-6));
  CHECK(p3.values[5] == doctest::Approx(5.356376).epsilon(1e-5));

  const IndexVector k1 = compute_vector(Graph(1), IndexSet::Core);
  REQUIRE(k1.size() == 6);
  for (std::size_t i = 0; i + 1 < k1.size(); ++i) {
    CHECK(k1.values[i] == 0.0);
  }
  CHECK(k1.values[5] == doctest::Approx(1.0).epsilon(1e-12)); // e^0

  const IndexVector k2 = compute_vector(builders::complete(2),
                                        IndexSet::Extended);
  REQUIRE(k2.size() == 10);
  CHECK(k2.ids == std::vector<IndexId>(kExtendedIndices.begin(),
                                       kExtendedIndices.end()));
  const double expected[10] = {1.0,
                               std::sqrt(2.0),
                               2.0,
                               1.0,
                               2.0,
                               std::exp(1.0) + std::exp(-1.0),
                               2.0,
                               1.0,
                               4.0 / 3.0,
                               1.0};
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(k2.values[i] == doctest::Approx(expected[i]).epsilon(1e-10));
  }
}

TEST_CASE("extended vector restricted to core positions is bit-identical") {
  std::mt19937_64 rng(17);
  std::vector<Graph> sample = enumerate_trees(7);
  for (int trial = 0; trial < 20; ++trial) {
    sample.push_back(
        oracles::random_connected_graph(rng, 3 + static_cast<int>(rng() % 8)));
  }
  for (const Graph& g : sample) {
    const IndexVector core = compute_vector(g, IndexSet::Core);
    const IndexVector ext = compute_vector(g, IndexSet::Extended);
    for (std::size_t i = 0; i < core.size(); ++i) {
      CHECK(ext.values[i] == core.values[i]);
    }
  }
}

TEST_CASE("every index is relabeling-invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = oracles::random_connected_graph(rng, n);
    const Graph h = oracles::random_relabeling(g, rng);
    const IndexVector a = compute_vector(g, IndexSet::Extended);
    const IndexVector b = compute_vector(h, IndexSet::Extended);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(close_rel(a.values[i], b.values[i]));
    }
  }
}

TEST_CASE("indices match the naive oracle on all graphs up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const IndexVector vec = compute_vector(g, IndexSet::Extended);
      for (std::size_t i = 0; i < vec.size(); ++i) {
        CHECK(close_rel(vec.values[i], oracles::naive_index(g, vec.ids[i])));
      }
    }
  }
}

TEST_CASE("Harary is at most Wiener, equal only at diameter <= 1") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const double h = harary(g);
      const double w = wiener(g);
      const bool is_complete = g.edge_count() == n * (n - 1) / 2;
      if (is_complete) {
        CHECK(h == doctest::Approx(w).epsilon(1e-12));
      } else {
        CHECK(h < w);
      }
    }
  }
}

TEST_CASE("disconnected graphs are rejected") {
  const Graph g(3);
  CHECK_THROWS_AS(harary(g), InputError);
  CHECK_THROWS_AS(sombor(g), InputError);
  CHECK_THROWS_AS(degree_distance(g), InputError);
  CHECK_THROWS_AS(gutman(g), InputError);
  CHECK_THROWS_AS(first_zagreb(g), InputError);
  CHECK_THROWS_AS(randic(g), InputError);
  CHECK_THROWS_AS(wiener(g), InputError);
  CHECK_THROWS_AS(compute_vector(g, IndexSet::Core), InputError);
  CHECK_THROWS_AS(compute_vector(g, IndexSet::Extended), InputError);
}

} // TEST_SUITE
