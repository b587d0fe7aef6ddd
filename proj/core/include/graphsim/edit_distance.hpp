#pragma once

#include <span>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim {

/// Result of an exact edit-distance computation.
struct EditDistanceResult {
  /// Minimal number of unit-cost operations (vertex insertion, vertex
  /// deletion, edge insertion, edge deletion) transforming g1 into a
  /// graph isomorphic to g2.
  int ged = 0;
  /// witness[u] is the g2 vertex that g1's vertex u maps to, or -1 when
  /// u is deleted. Injective on its defined part; realizes exactly
  /// `ged` operations (see mapping_cost).
  std::vector<int> witness;
};

/// Exact unit-cost edit distance by branch and bound over injective
/// vertex assignments from the smaller graph into the larger, assigning
/// highest-degree vertices first and pruning with half the L1 distance
/// between the sorted degree sequences of the unassigned remainders
/// (admissible: every edge operation moves two degrees by one).
///
/// Both graphs must be connected; max(n1, n2) <= 10, larger inputs
/// throw BudgetError rather than fall back to a heuristic.
EditDistanceResult ged(const Graph& g1, const Graph& g2);

/// s_ged = 1 / (ged + 1), in (0, 1], equal to 1 iff isomorphic.
double s_ged(const Graph& g1, const Graph& g2);

/// Number of elementary operations realized by a given partial
/// injection (witness[u] in V(g2) or -1): vertex deletions and their
/// incident g1 edges, vertex insertions, mismatched edges between
/// mapped pairs, and g2 edges not covered by the image. Validates
/// injectivity and ranges. ged(g1,g2).witness evaluates to ged.
int mapping_cost(const Graph& g1, const Graph& g2,
                 std::span<const int> witness);

} // namespace graphsim
