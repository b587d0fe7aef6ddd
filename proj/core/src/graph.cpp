#include "graphsim/graph.hpp"

#include <algorithm>
#include <limits>

#include "graphsim/errors.hpp"

namespace graphsim {

Graph::Graph(int n, std::string label)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
      label_(std::move(label)) {
  if (n < 1)
    throw InputError("graph must have at least one vertex, got n=" +
                     std::to_string(n));
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges,
                        std::string label) {
  Graph g(n, std::move(label));
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw InputError("vertex " + std::to_string(u) + " out of range [0," +
                     std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw InputError("self-loop at vertex " + std::to_string(u) +
                     " is not allowed in a simple graph");
  if (bit(u, v))
    return;
  bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
      std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] |=
      std::uint64_t{1} << (u % 64);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InputError("permutation length does not match vertex count");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
      throw InputError("relabeling is not a permutation of 0..n-1");
    seen[static_cast<std::size_t>(p)] = true;
  }
  Graph g(n_, label_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v)
        g.add_edge(perm[u], perm[v]);
  return g;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> stack{0};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  if (!is_connected(g))
    throw InputError("all_pairs_distances requires a connected graph");
  const int n = g.vertex_count();
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> d(static_cast<std::size_t>(n) * n, inf);
  for (int u = 0; u < n; ++u) {
    d[static_cast<std::size_t>(u) * n + u] = 0;
    for (int v : g.neighbors(u))
      d[static_cast<std::size_t>(u) * n + v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const int dik = d[static_cast<std::size_t>(i) * n + k];
      if (dik == inf)
        continue;
      for (int j = 0; j < n; ++j) {
        const int alt = dik + d[static_cast<std::size_t>(k) * n + j];
        if (alt < d[static_cast<std::size_t>(i) * n + j])
          d[static_cast<std::size_t>(i) * n + j] = alt;
      }
    }
  return DistanceMatrix(n, std::move(d));
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
  for (int u = 0; u < g.vertex_count(); ++u)
    deg[static_cast<std::size_t>(u)] = g.degree(u);
  return deg;
}

} // namespace graphsim
