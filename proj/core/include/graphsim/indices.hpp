#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim {

/// The ten supported topological indices, in the fixed vector order.
/// The first six form the core set (k=6), all ten the extended set (k=10).
enum class IndexId {
  Harary,
  Sombor,
  DegreeDistance,
  Gutman,
  Energy,
  Estrada,
  FirstZagreb,
  Randic,
  ResolventEnergy,
  Wiener,
};

enum class IndexSet { Core, Extended };

inline constexpr std::array<IndexId, 6> kCoreIndices = {
    IndexId::Harary,      IndexId::Sombor, IndexId::DegreeDistance,
    IndexId::Gutman,      IndexId::Energy, IndexId::Estrada,
};

inline constexpr std::array<IndexId, 10> kExtendedIndices = {
    IndexId::Harary,      IndexId::Sombor,          IndexId::DegreeDistance,
    IndexId::Gutman,      IndexId::Energy,          IndexId::Estrada,
    IndexId::FirstZagreb, IndexId::Randic,          IndexId::ResolventEnergy,
    IndexId::Wiener,
};

std::string_view index_name(IndexId id);

/// Raw index values of one graph in fixed IndexId order.
struct IndexVector {
  std::string label;
  std::vector<IndexId> ids;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// Individual indices. Each requires a connected graph and evaluates the
// standard definition; see index_name() for the naming.
double harary(const Graph& g);            // sum over pairs of 1/d(u,v)
double sombor(const Graph& g);            // sum over edges of sqrt(du^2+dv^2)
double degree_distance(const Graph& g);   // sum over pairs of (du+dv)*d(u,v)
double gutman(const Graph& g);            // sum over pairs of du*dv*d(u,v)
double first_zagreb(const Graph& g);      // sum of du^2
double randic(const Graph& g);            // sum over edges of 1/sqrt(du*dv)
double wiener(const Graph& g);            // sum over pairs of d(u,v)
// graph_energy, estrada_index, resolvent_energy live in spectral.hpp.

/// All indices of the requested set in one pass; the distance matrix,
/// degree sequence and spectrum are computed once and shared.
IndexVector compute_vector(const Graph& g, IndexSet set);

} // namespace graphsim
