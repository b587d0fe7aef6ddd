#pragma once

#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim {

/// Eigenvalues of an adjacency matrix, sorted descending.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  double residual = 0.0; // max |off-diagonal| at convergence
  int sweeps = 0;        // Jacobi sweeps performed
};

/// Adjacency spectrum via cyclic Jacobi rotations. Converges when the
/// off-diagonal Frobenius norm drops below 1e-12 * n; hard cap of 100
/// sweeps, after which a ConvergenceError carrying the residual is
/// thrown rather than returning an unconverged result. The trace and
/// Frobenius identities (sum lambda_i = 0, sum lambda_i^2 = 2|E|) are
/// verified on every solve.
SpectralDecomposition eigenvalues(const Graph& g);

/// E(G) = sum |lambda_i|. Requires a connected graph.
double graph_energy(const Graph& g);

/// EE(G) = sum exp(lambda_i). Requires a connected graph.
double estrada_index(const Graph& g);

/// ER(G) = sum 1/(n - lambda_i). Requires a connected graph; for simple
/// graphs lambda_1 <= n-1 so every denominator is at least 1/... positive.
double resolvent_energy(const Graph& g);

// Overloads evaluating the same index formulas on a precomputed
// decomposition (n is the vertex count of the underlying graph).
double graph_energy(const SpectralDecomposition& spec);
double estrada_index(const SpectralDecomposition& spec);
double resolvent_energy(const SpectralDecomposition& spec, int n);

} // namespace graphsim
