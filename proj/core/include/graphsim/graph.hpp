#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphsim {

/// Undirected simple graph on vertices 0..n-1.
///
/// The adjacency matrix (packed bitset rows) is the source of truth;
/// sorted adjacency lists are maintained alongside it. Instances are
/// treated as immutable once built, so concurrent read access is safe.
class Graph {
public:
  explicit Graph(int n, std::string label = {});

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
                          std::string label = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  // Throws InputError on out-of-range endpoints or self-loops.
  // Adding an existing edge is a no-op.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return bit(u, v);
  }

  const std::vector<int>& neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
  }

  int degree(int u) const {
    check_vertex(u);
    return static_cast<int>(adj_[u].size());
  }

  /// Edges as (u,v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Adjacency row of u as packed 64-bit words (bit v set iff u~v).
  std::span<const std::uint64_t> row(int u) const {
    check_vertex(u);
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Graph with vertex v renamed to perm[v]. perm must be a permutation
  /// of 0..n-1. The label is carried over.
  Graph relabeled(std::span<const int> perm) const;

  /// Structural equality: same vertex count and same labeled edge set.
  /// The text label is metadata and does not participate.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

private:
  void check_vertex(int u) const;
  bool bit(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ +
                  static_cast<std::size_t>(v) / 64] >>
            (v % 64)) &
           1u;
  }

  int n_ = 0;
  int edge_count_ = 0;
  std::size_t words_ = 0; // 64-bit words per adjacency row
  std::string label_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
};

/// All-pairs shortest-path distances of a connected graph.
/// Symmetric, zero diagonal, finite entries.
class DistanceMatrix {
public:
  DistanceMatrix(int n, std::vector<int> data)
      : n_(n), d_(std::move(data)) {}

  int size() const { return n_; }
  int at(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

private:
  int n_;
  std::vector<int> d_;
};

/// True iff a traversal from vertex 0 reaches all vertices. K1 is connected.
bool is_connected(const Graph& g);

/// Floyd-Warshall over the adjacency matrix. Throws InputError when the
/// graph is disconnected (an infinite entry would poison every
/// distance-based index downstream).
DistanceMatrix all_pairs_distances(const Graph& g);

/// degrees(g)[u] = |{v : u ~ v}|.
std::vector<int> degrees(const Graph& g);

} // namespace graphsim
