#include "graphsim/edit_distance.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "graphsim/errors.hpp"

namespace graphsim {
namespace {

constexpr int kGedMaxN = 10;

void require_connected_input(const Graph& g, const char* which) {
  if (!is_connected(g)) {
    throw InputError(std::string("edit distance requires connected graphs; ") +
                     which + " is disconnected");
  }
}

std::array<std::uint16_t, kGedMaxN> bitmask_rows(const Graph& g) {
  std::array<std::uint16_t, kGedMaxN> rows{};
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::uint16_t row = 0;
    for (int u : g.neighbors(v)) row |= static_cast<std::uint16_t>(1U << u);
    rows[static_cast<std::size_t>(v)] = row;
  }
  return rows;
}

// Branch and bound over injections from the smaller vertex set (a, order
// na) into the larger (b, order nb). Vertex insertions are charged once
// up front; deletions never occur in this orientation.
struct GedSearch {
  int na = 0;
  int nb = 0;
  std::array<std::uint16_t, kGedMaxN> a{};
  std::array<std::uint16_t, kGedMaxN> b{};
  int b_edges = 0;

  std::array<int, kGedMaxN> order{};  // a's vertices, highest degree first
  std::array<int, kGedMaxN> image{};  // image[k] = target of order[k]
  int best = 0;
  std::array<int, kGedMaxN> best_image{};

  // Half the L1 distance between the sorted degree sequences of the
  // subgraphs induced on the unassigned remainders, the smaller side
  // zero-padded. Every edge operation changes two degrees by one, so
  // this never exceeds the true remaining edge-edit cost.
  int remainder_bound(std::uint16_t rest_a, std::uint16_t rest_b) const {
    std::array<int, kGedMaxN> da{};
    std::array<int, kGedMaxN> db{};
    int ca = 0;
    std::uint16_t m = rest_a;
    while (m != 0) {
      const int v = std::countr_zero(m);
      m = static_cast<std::uint16_t>(m & (m - 1));
      da[static_cast<std::size_t>(ca++)] = std::popcount(
          static_cast<std::uint16_t>(a[static_cast<std::size_t>(v)] & rest_a));
    }
    int cb = 0;
    m = rest_b;
    while (m != 0) {
      const int v = std::countr_zero(m);
      m = static_cast<std::uint16_t>(m & (m - 1));
      db[static_cast<std::size_t>(cb++)] = std::popcount(
          static_cast<std::uint16_t>(b[static_cast<std::size_t>(v)] & rest_b));
    }
    std::sort(da.begin(), da.begin() + ca);
    std::sort(db.begin(), db.begin() + cb);
    // Zero-padding the shorter sequence aligns sorted tails.
    int diff = 0;
    for (int i = 0; i < cb; ++i) {
      const int x = (i < cb - ca) ? 0 : da[static_cast<std::size_t>(i - (cb - ca))];
      diff += std::abs(x - db[static_cast<std::size_t>(i)]);
    }
    return diff / 2;
  }

  void dfs(int k, int cost, std::uint16_t used) {
    if (k == na) {
      int covered = 0;
      std::uint16_t m = used;
      while (m != 0) {
        const int t = std::countr_zero(m);
        m = static_cast<std::uint16_t>(m & (m - 1));
        covered += std::popcount(
            static_cast<std::uint16_t>(b[static_cast<std::size_t>(t)] & used));
      }
      const int total = cost + (b_edges - covered / 2);
      if (total < best) {
        best = total;
        best_image = image;
      }
      return;
    }
    std::uint16_t rest_a = 0;
    for (int j = k; j < na; ++j) {
      rest_a |= static_cast<std::uint16_t>(1U << order[static_cast<std::size_t>(j)]);
    }
    const int u = order[static_cast<std::size_t>(k)];
    for (int t = 0; t < nb; ++t) {
      if ((used >> t) & 1U) continue;
      int step = cost;
      for (int j = 0; j < k; ++j) {
        const int v = order[static_cast<std::size_t>(j)];
        const bool ea =
            (a[static_cast<std::size_t>(u)] >> v) & 1U;
        const bool eb = (b[static_cast<std::size_t>(t)] >>
                         image[static_cast<std::size_t>(j)]) &
                        1U;
        if (ea != eb) ++step;
      }
      const std::uint16_t used2 =
          static_cast<std::uint16_t>(used | (1U << t));
      const std::uint16_t rest_b =
          static_cast<std::uint16_t>(~used2 & ((1U << nb) - 1U));
      const std::uint16_t rest_a_next = static_cast<std::uint16_t>(
          rest_a & ~(1U << u));
      if (step + remainder_bound(rest_a_next, rest_b) >= best) continue;
      image[static_cast<std::size_t>(k)] = t;
      dfs(k + 1, step, used2);
    }
  }

  // Returns the minimal cost; best_image holds the realizing injection.
  int run() {
    for (int v = 0; v < na; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.begin() + na, [&](int x, int y) {
      return std::popcount(a[static_cast<std::size_t>(x)]) >
             std::popcount(a[static_cast<std::size_t>(y)]);
    });
    // Any injection extended with all missing insertions is feasible,
    // so the identity-order assignment caps the search from the start.
    for (int v = 0; v < na; ++v) {
      image[static_cast<std::size_t>(v)] =
          order[static_cast<std::size_t>(v)];
    }
    {
      int cost = 0;
      std::uint16_t used = 0;
      for (int k = 0; k < na; ++k) {
        const int u = order[static_cast<std::size_t>(k)];
        const int t = image[static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j) {
          const int v = order[static_cast<std::size_t>(j)];
          const bool ea = (a[static_cast<std::size_t>(u)] >> v) & 1U;
          const bool eb = (b[static_cast<std::size_t>(t)] >>
                           image[static_cast<std::size_t>(j)]) &
                          1U;
          if (ea != eb) ++cost;
        }
        used = static_cast<std::uint16_t>(used | (1U << t));
      }
      int covered = 0;
      std::uint16_t m = used;
      while (m != 0) {
        const int t = std::countr_zero(m);
        m = static_cast<std::uint16_t>(m & (m - 1));
        covered += std::popcount(
            static_cast<std::uint16_t>(b[static_cast<std::size_t>(t)] & used));
      }
      best = cost + (b_edges - covered / 2);
      best_image = image;
    }
    dfs(0, 0, 0);
    return best;
  }
};

} // namespace

EditDistanceResult ged(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  if (std::max(n1, n2) > kGedMaxN) {
    throw BudgetError("exact edit distance supports max(n1, n2) <= " +
                      std::to_string(kGedMaxN) + ", got " +
                      std::to_string(std::max(n1, n2)));
  }
  require_connected_input(g1, "g1");
  require_connected_input(g2, "g2");

  const bool swapped = n1 > n2;
  const Graph& small = swapped ? g2 : g1;
  const Graph& large = swapped ? g1 : g2;

  GedSearch search;
  search.na = small.vertex_count();
  search.nb = large.vertex_count();
  search.a = bitmask_rows(small);
  search.b = bitmask_rows(large);
  search.b_edges = large.edge_count();
  const int edge_cost = search.run();

  EditDistanceResult result;
  result.ged = (search.nb - search.na) + edge_cost;
  result.witness.assign(static_cast<std::size_t>(n1), -1);
  if (!swapped) {
    for (int k = 0; k < search.na; ++k) {
      result.witness[static_cast<std::size_t>(
          search.order[static_cast<std::size_t>(k)])] =
          search.best_image[static_cast<std::size_t>(k)];
    }
  } else {
    // The search mapped g2 into g1; invert to report g1 -> g2.
    for (int k = 0; k < search.na; ++k) {
      result.witness[static_cast<std::size_t>(
          search.best_image[static_cast<std::size_t>(k)])] =
          search.order[static_cast<std::size_t>(k)];
    }
  }
  return result;
}

double s_ged(const Graph& g1, const Graph& g2) {
  return 1.0 / (ged(g1, g2).ged + 1);
}

int mapping_cost(const Graph& g1, const Graph& g2,
                 std::span<const int> witness) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  if (static_cast<int>(witness.size()) != n1) {
    throw InputError("witness length " + std::to_string(witness.size()) +
                     " does not match vertex count " + std::to_string(n1));
  }
  std::vector<bool> hit(static_cast<std::size_t>(n2), false);
  int mapped = 0;
  for (int u = 0; u < n1; ++u) {
    const int t = witness[static_cast<std::size_t>(u)];
    if (t == -1) continue;
    if (t < 0 || t >= n2) {
      throw InputError("witness target " + std::to_string(t) +
                       " out of range");
    }
    if (hit[static_cast<std::size_t>(t)]) {
      throw InputError("witness is not injective: target " +
                       std::to_string(t) + " used twice");
    }
    hit[static_cast<std::size_t>(t)] = true;
    ++mapped;
  }

  int cost = (n1 - mapped) + (n2 - mapped);
  for (const auto& [u, v] : g1.edges()) {
    const int tu = witness[static_cast<std::size_t>(u)];
    const int tv = witness[static_cast<std::size_t>(v)];
    if (tu == -1 || tv == -1) {
      ++cost; // deleted along with a deleted endpoint
    } else if (!g2.has_edge(tu, tv)) {
      ++cost; // mapped pair loses this edge
    }
  }
  for (const auto& [x, y] : g2.edges()) {
    // Inserted unless both endpoints are images of a g1 edge.
    if (!hit[static_cast<std::size_t>(x)] || !hit[static_cast<std::size_t>(y)]) {
      ++cost;
      continue;
    }
    int px = -1;
    int py = -1;
    for (int u = 0; u < n1; ++u) {
      if (witness[static_cast<std::size_t>(u)] == x) px = u;
      if (witness[static_cast<std::size_t>(u)] == y) py = u;
    }
    if (!g1.has_edge(px, py)) ++cost;
  }
  return cost;
}

} // namespace graphsim
