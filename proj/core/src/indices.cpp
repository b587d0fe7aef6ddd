#include "graphsim/indices.hpp"

#include <cmath>

#include "graphsim/errors.hpp"
#include "graphsim/spectral.hpp"

namespace graphsim {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw InputError(std::string(what) + " requires a connected graph");
}

double harary_from(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.vertex_count();
  double s = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      s += 1.0 / dist.at(u, v);
  return s;
}

double sombor_from(const Graph& g, const std::vector<int>& deg) {
  double s = 0.0;
  for (auto [u, v] : g.edges())
    s += std::sqrt(static_cast<double>(deg[u]) * deg[u] +
                   static_cast<double>(deg[v]) * deg[v]);
  return s;
}

double degree_distance_from(const Graph& g, const DistanceMatrix& dist,
                            const std::vector<int>& deg) {
  const int n = g.vertex_count();
  double s = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      s += static_cast<double>(deg[u] + deg[v]) * dist.at(u, v);
  return s;
}

double gutman_from(const Graph& g, const DistanceMatrix& dist,
                   const std::vector<int>& deg) {
  const int n = g.vertex_count();
  double s = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      s += static_cast<double>(deg[u]) * deg[v] * dist.at(u, v);
  return s;
}

double first_zagreb_from(const std::vector<int>& deg) {
  double s = 0.0;
  for (int d : deg)
    s += static_cast<double>(d) * d;
  return s;
}

double randic_from(const Graph& g, const std::vector<int>& deg) {
  double s = 0.0;
  for (auto [u, v] : g.edges())
    s += 1.0 / std::sqrt(static_cast<double>(deg[u]) * deg[v]);
  return s;
}

double wiener_from(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.vertex_count();
  double s = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      s += dist.at(u, v);
  return s;
}

} // namespace

std::string_view index_name(IndexId id) {
  switch (id) {
  case IndexId::Harary:
    return "harary";
  case IndexId::Sombor:
    return "sombor";
  case IndexId::DegreeDistance:
    return "degree_distance";
  case IndexId::Gutman:
    return "gutman";
  case IndexId::Energy:
    return "energy";
  case IndexId::Estrada:
    return "estrada";
  case IndexId::FirstZagreb:
    return "first_zagreb";
  case IndexId::Randic:
    return "randic";
  case IndexId::ResolventEnergy:
    return "resolvent_energy";
  case IndexId::Wiener:
    return "wiener";
  }
  return "unknown";
}

double harary(const Graph& g) {
  require_connected(g, "harary");
  return harary_from(g, all_pairs_distances(g));
}

double sombor(const Graph& g) {
  require_connected(g, "sombor");
  return sombor_from(g, degrees(g));
}

double degree_distance(const Graph& g) {
  require_connected(g, "degree_distance");
  return degree_distance_from(g, all_pairs_distances(g), degrees(g));
}

double gutman(const Graph& g) {
  require_connected(g, "gutman");
  return gutman_from(g, all_pairs_distances(g), degrees(g));
}

double first_zagreb(const Graph& g) {
  require_connected(g, "first_zagreb");
  return first_zagreb_from(degrees(g));
}

double randic(const Graph& g) {
  require_connected(g, "randic");
  return randic_from(g, degrees(g));
}

double wiener(const Graph& g) {
  require_connected(g, "wiener");
  return wiener_from(g, all_pairs_distances(g));
}

IndexVector compute_vector(const Graph& g, IndexSet set) {
  require_connected(g, "compute_vector");
  const DistanceMatrix dist = all_pairs_distances(g);
  const std::vector<int> deg = degrees(g);
  const SpectralDecomposition spec = eigenvalues(g);

  IndexVector out;
  out.label = g.label();
  if (set == IndexSet::Core)
    out.ids.assign(kCoreIndices.begin(), kCoreIndices.end());
  else
    out.ids.assign(kExtendedIndices.begin(), kExtendedIndices.end());
  out.values.reserve(out.ids.size());
  for (IndexId id : out.ids) {
    switch (id) {
    case IndexId::Harary:
      out.values.push_back(harary_from(g, dist));
      break;
    case IndexId::Sombor:
      out.values.push_back(sombor_from(g, deg));
      break;
    case IndexId::DegreeDistance:
      out.values.push_back(degree_distance_from(g, dist, deg));
      break;
    case IndexId::Gutman:
      out.values.push_back(gutman_from(g, dist, deg));
      break;
    case IndexId::Energy:
      out.values.push_back(graph_energy(spec));
      break;
    case IndexId::Estrada:
      out.values.push_back(estrada_index(spec));
      break;
    case IndexId::FirstZagreb:
      out.values.push_back(first_zagreb_from(deg));
      break;
    case IndexId::Randic:
      out.values.push_back(randic_from(g, deg));
      break;
    case IndexId::ResolventEnergy:
      out.values.push_back(resolvent_energy(spec, g.vertex_count()));
      break;
    case IndexId::Wiener:
      out.values.push_back(wiener_from(g, dist));
      break;
    }
  }
  return out;
}

} // namespace graphsim
