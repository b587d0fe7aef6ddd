#pragma once

#include <random>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"
#include "graphsim/indices.hpp"

// Independent reference implementations for cross-checking the library.
// Everything here is deliberately naive: repeated BFS instead of
// Floyd-Warshall, Householder + Sturm bisection instead of Jacobi,
// exhaustive search instead of branch and bound. Only correctness and
// auditability matter; nothing is shared with the library internals
// beyond the Graph accessors.
namespace oracles {

// BFS from every vertex; distances[u][v], -1 when unreachable.
std::vector<std::vector<int>> bfs_distances(const graphsim::Graph& g);

// One index straight from its definition, distances via bfs_distances,
// spectrum via sturm_eigenvalues.
double naive_index(const graphsim::Graph& g, graphsim::IndexId id);

// Adjacency eigenvalues, sorted descending: Householder reduction to
// tridiagonal form, then bisection driven by Sturm sequence counts.
std::vector<double> sturm_eigenvalues(const graphsim::Graph& g);

// Adjacency eigenvalues for n <= 4, sorted descending, computed from the
// exact integer characteristic polynomial (Faddeev-LeVerrier) with roots
// isolated by recursive derivative interlacing. Multiple roots are
// recovered with their multiplicities; throws if the recovered
// multiplicities do not sum to n.
std::vector<double> charpoly_eigenvalues(const graphsim::Graph& g);

// Canonical certificates of every isomorphism class of trees on n
// vertices (1 <= n <= 8), obtained by decoding all n^(n-2) Pruefer
// sequences. Sorted ascending, duplicates removed.
std::vector<std::string> prufer_tree_certificates(int n);

// Minimum over all vertex bijections of the symmetric difference of the
// edge sets. Requires equal vertex counts, n <= 8.
int ged_bijection_oracle(const graphsim::Graph& g1, const graphsim::Graph& g2);

// Minimum edit cost over every partial injection: any subset of g1's
// vertices kept and mapped injectively into g2, the rest deleted,
// unmatched g2 vertices inserted, plus all implied edge operations.
// Exponential; requires n <= 5 on both sides.
int ged_partial_injection_oracle(const graphsim::Graph& g1,
                                 const graphsim::Graph& g2);

// G(n, p) redrawn until connected.
graphsim::Graph random_connected_graph(std::mt19937_64& rng, int n,
                                       double p = 0.5);

// Copy of g under a uniformly random vertex permutation.
graphsim::Graph random_relabeling(const graphsim::Graph& g,
                                  std::mt19937_64& rng);

} // namespace oracles
