#include "graphsim/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <unordered_set>
#include <utility>

#include "graphsim/errors.hpp"
#include "graphsim/graph6.hpp"

namespace graphsim {
namespace {

constexpr int kCanonMaxN = 10;

// Canonical labeling on bitmask adjacency rows, n <= 10 so the full
// upper triangle (<= 45 bits) packs into one 64-bit word.
//
// Equitable refinement: a vertex signature packs its current color with
// the count of its neighbors in every color class, so re-coloring by
// signature rank splits classes without reordering them. When the
// partition is not discrete the search individualizes each vertex of the
// first non-singleton class in turn; discrete partitions produce a
// candidate adjacency bit string and the minimum over all candidates is
// the canonical form.
struct CanonEngine {
  int n = 0;
  std::array<std::uint16_t, kCanonMaxN> adj{};
  std::uint64_t best = ~0ULL;

  using Colors = std::array<std::int8_t, kCanonMaxN>;

  // Refines to the coarsest stable partition at least as fine as the
  // input; returns the number of color classes.
  int refine(Colors& color) const {
    int classes = 1;
    for (int v = 0; v < n; ++v) {
      classes = std::max(classes, static_cast<int>(color[v]) + 1);
    }
    while (classes < n) {
      std::array<std::uint64_t, kCanonMaxN> sig{};
      for (int v = 0; v < n; ++v) {
        // Own color above 40 bits, one 4-bit neighbor counter per class.
        std::uint64_t s = static_cast<std::uint64_t>(color[v]) << 40;
        std::uint16_t m = adj[v];
        while (m != 0) {
          const int u = std::countr_zero(m);
          m = static_cast<std::uint16_t>(m & (m - 1));
          s += 1ULL << (4 * color[u]);
        }
        sig[v] = s;
      }
      std::array<std::uint64_t, kCanonMaxN> sorted = sig;
      std::sort(sorted.begin(), sorted.begin() + n);
      auto* const end = std::unique(sorted.begin(), sorted.begin() + n);
      const int next_classes = static_cast<int>(end - sorted.begin());
      for (int v = 0; v < n; ++v) {
        color[v] = static_cast<std::int8_t>(
            std::lower_bound(sorted.begin(), end, sig[v]) - sorted.begin());
      }
      if (next_classes == classes) break;
      classes = next_classes;
    }
    return classes;
  }

  // Upper triangle of the relabeled adjacency matrix in column-major
  // order, first bit most significant: numeric order on the packed word
  // equals lexicographic order on the bit string.
  std::uint64_t pack(const Colors& color) const {
    std::array<int, kCanonMaxN> vertex_at{};
    for (int v = 0; v < n; ++v) vertex_at[color[v]] = v;
    std::uint64_t bits = 0;
    int pos = 63;
    for (int j = 1; j < n; ++j) {
      const std::uint16_t row = adj[vertex_at[j]];
      for (int i = 0; i < j; ++i, --pos) {
        if ((row >> vertex_at[i]) & 1U) bits |= 1ULL << pos;
      }
    }
    return bits;
  }

  void search(const Colors& color, int classes) {
    if (classes == n) {
      best = std::min(best, pack(color));
      return;
    }
    std::array<int, kCanonMaxN> count{};
    for (int v = 0; v < n; ++v) ++count[color[v]];
    int target = 0;
    while (count[target] < 2) ++target;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      Colors child = color;
      for (int u = 0; u < n; ++u) {
        if (child[u] > target || (child[u] == target && u != v)) {
          ++child[u];
        }
      }
      const int child_classes = refine(child);
      search(child, child_classes);
    }
  }

  std::uint64_t canonical_bits() {
    best = ~0ULL;
    Colors color{};
    const int classes = refine(color);
    search(color, classes);
    return best;
  }
};

Graph graph_from_packed_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int pos = 63;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --pos) {
      if ((bits >> pos) & 1ULL) g.add_edge(i, j);
    }
  }
  return g;
}

// Beyer-Hedetniemi successor over canonical level sequences of rooted
// trees: s[i] is the depth of the i-th vertex in preorder, s[0] = 0,
// subtrees listed in non-increasing lexicographic order. Enumeration
// runs lexicographically downward from the path [0,1,...,n-1] and stops
// after the star [0,1,...,1].
bool next_level_sequence(std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int p = n - 1;
  while (p >= 0 && s[p] <= 1) --p;
  if (p < 0) return false;
  int q = p - 1;
  while (s[q] != s[p] - 1) --q;
  for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
  return true;
}

Graph tree_from_level_sequence(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  Graph g(n);
  std::vector<int> last_at_depth(static_cast<std::size_t>(n), -1);
  last_at_depth[0] = 0;
  for (int i = 1; i < n; ++i) {
    g.add_edge(last_at_depth[static_cast<std::size_t>(s[i]) - 1], i);
    last_at_depth[static_cast<std::size_t>(s[i])] = i;
  }
  return g;
}

// The one or two middle vertices left by repeatedly peeling leaves.
std::vector<int> tree_centers(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      deg[static_cast<std::size_t>(v)] = 0;
      for (int u : g.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string ahu_string(const Graph& g, int v, int parent) {
  std::vector<std::string> parts;
  for (int u : g.neighbors(v)) {
    if (u != parent) parts.push_back(ahu_string(g, u, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& part : parts) out += part;
  out += ')';
  return out;
}

// Canonical form of a free tree: the smaller of the rooted canonical
// strings over its one or two centers. Equal strings iff isomorphic.
std::string tree_certificate(const Graph& g) {
  std::string best;
  bool first = true;
  for (int c : tree_centers(g)) {
    std::string s = ahu_string(g, c, -1);
    if (first || s < best) {
      best = std::move(s);
      first = false;
    }
  }
  return best;
}

int max_degree_of(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

std::string indexed_label(const std::string& prefix, std::size_t index,
                          std::size_t count) {
  const std::size_t width = std::to_string(count).size();
  std::string digits = std::to_string(index);
  return prefix + "_" + std::string(width - digits.size(), '0') + digits;
}

// Bitmask-row connectivity for the enumeration hot loop.
bool connected_rows(const std::uint16_t* adj, int n) {
  std::uint16_t reached = 1;
  std::uint16_t frontier = 1;
  while (frontier != 0) {
    std::uint16_t next = 0;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier = static_cast<std::uint16_t>(frontier & (frontier - 1));
      next |= adj[v];
    }
    frontier = static_cast<std::uint16_t>(next & ~reached);
    reached |= next;
  }
  return reached == (1U << n) - 1U;
}

} // namespace

CanonicalCertificate canonical_certificate(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kCanonMaxN) {
    throw BudgetError("canonical certificate supports n <= " +
                      std::to_string(kCanonMaxN) + ", got n = " +
                      std::to_string(n));
  }
  CanonEngine engine;
  engine.n = n;
  for (int v = 0; v < n; ++v) {
    std::uint16_t row = 0;
    for (int u : g.neighbors(v)) row |= static_cast<std::uint16_t>(1U << u);
    engine.adj[static_cast<std::size_t>(v)] = row;
  }
  return encode_graph6(graph_from_packed_bits(n, engine.canonical_bits()));
}

std::vector<Graph> enumerate_trees(int n, std::optional<int> max_degree) {
  if (n < 1 || n > 12) {
    throw InputError("tree enumeration supports 1 <= n <= 12, got n = " +
                     std::to_string(n));
  }
  if (max_degree && *max_degree < 2) {
    throw InputError("degree cap must be >= 2, got " +
                     std::to_string(*max_degree));
  }

  std::map<std::string, Graph> classes;
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
  bool more = true;
  while (more) {
    Graph t = tree_from_level_sequence(seq);
    if (!max_degree || max_degree_of(t) <= *max_degree) {
      std::string cert = tree_certificate(t);
      classes.emplace(std::move(cert), std::move(t));
    }
    more = next_level_sequence(seq);
  }

  const std::string prefix =
      (max_degree ? "a" : "t") + std::to_string(n);
  std::vector<Graph> family;
  family.reserve(classes.size());
  std::size_t index = 0;
  for (auto& [cert, tree] : classes) {
    tree.set_label(indexed_label(prefix, ++index, classes.size()));
    family.push_back(std::move(tree));
  }
  return family;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) {
    throw InputError("vertex count must be >= 1, got n = " +
                     std::to_string(n));
  }
  if (n > 7) {
    throw BudgetError(
        "exhaustive connected-graph enumeration supports n <= 7, got n = " +
        std::to_string(n));
  }

  const int pairs = n * (n - 1) / 2;
  std::array<std::pair<int, int>, 21> endpoint{};
  {
    int b = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) endpoint[static_cast<std::size_t>(b++)] = {i, j};
    }
  }

  std::unordered_set<std::uint64_t> seen;
  CanonEngine engine;
  engine.n = n;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    std::array<std::uint16_t, kCanonMaxN> adj{};
    std::uint32_t m = mask;
    while (m != 0) {
      const int b = std::countr_zero(m);
      m &= m - 1;
      const auto [i, j] = endpoint[static_cast<std::size_t>(b)];
      adj[static_cast<std::size_t>(i)] |=
          static_cast<std::uint16_t>(1U << j);
      adj[static_cast<std::size_t>(j)] |=
          static_cast<std::uint16_t>(1U << i);
    }
    if (!connected_rows(adj.data(), n)) continue;
    engine.adj = adj;
    seen.insert(engine.canonical_bits());
  }

  std::vector<std::uint64_t> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());

  std::vector<Graph> family;
  family.reserve(keys.size());
  const std::string prefix = "n" + std::to_string(n);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    Graph g = graph_from_packed_bits(n, keys[i]);
    g.set_label(indexed_label(prefix, i + 1, keys.size()));
    family.push_back(std::move(g));
  }
  return family;
}

std::vector<Graph> load_family(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());

  std::vector<Graph> family;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      g.set_label("g" + std::to_string(family.size() + 1));
      family.push_back(std::move(g));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " +
                           e.what(),
                       e.byte_offset, lineno);
    }
  }
  return family;
}

void write_graph6_file(const std::filesystem::path& path,
                       const std::vector<Graph>& family) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  for (const Graph& g : family) out << encode_graph6(g) << '\n';
  if (!out) throw InputError("write failed for " + path.string());
}

} // namespace graphsim
