#include "graphsim/fingerprints.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <queue>
#include <string>

#include "graphsim/errors.hpp"

namespace graphsim {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// BFS distances from source on adjacency lists.
std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int u : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(u)] == -1) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push(u);
      }
    }
  }
  return dist;
}

} // namespace

Fingerprint::Fingerprint(int width) : width_(width) {
  if (width < 1 || (width & (width - 1)) != 0) {
    throw InputError("fingerprint width must be a power of two, got " +
                     std::to_string(width));
  }
  words_.assign(static_cast<std::size_t>((width + 63) / 64), 0);
}

void Fingerprint::set(int bit) {
  if (bit < 0 || bit >= width_) {
    throw InputError("bit index " + std::to_string(bit) +
                     " outside width " + std::to_string(width_));
  }
  std::uint64_t& word = words_[static_cast<std::size_t>(bit) / 64];
  const std::uint64_t mask = 1ULL << (bit % 64);
  if ((word & mask) == 0) {
    word |= mask;
    ++popcount_;
  }
}

bool Fingerprint::test(int bit) const {
  if (bit < 0 || bit >= width_) {
    throw InputError("bit index " + std::to_string(bit) +
                     " outside width " + std::to_string(width_));
  }
  return (words_[static_cast<std::size_t>(bit) / 64] >> (bit % 64)) & 1ULL;
}

Fingerprint morgan_fingerprint(const Graph& g, int radius, int bits) {
  if (radius < 0) {
    throw InputError("radius must be >= 0, got " + std::to_string(radius));
  }
  if (!is_connected(g)) {
    throw InputError("fingerprints require a connected graph");
  }
  Fingerprint fp(bits);
  const int n = g.vertex_count();

  // ball_size[v][r] = vertices within distance r of v, for the
  // grew-vs-previous-radius emission rule.
  std::vector<std::vector<int>> ball_size(
      static_cast<std::size_t>(n),
      std::vector<int>(static_cast<std::size_t>(radius) + 1, 0));
  for (int v = 0; v < n; ++v) {
    const std::vector<int> dist = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) {
      const int d = dist[static_cast<std::size_t>(u)];
      for (int r = d; r <= radius; ++r) {
        ++ball_size[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)];
      }
    }
  }

  std::vector<std::uint64_t> id(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    id[static_cast<std::size_t>(v)] =
        splitmix64(static_cast<std::uint64_t>(g.degree(v)));
  }

  const int mask = bits - 1;
  for (int v = 0; v < n; ++v) {
    fp.set(static_cast<int>(id[static_cast<std::size_t>(v)] &
                            static_cast<std::uint64_t>(mask)));
  }
  std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> neighbor_ids;
  for (int r = 1; r <= radius; ++r) {
    for (int v = 0; v < n; ++v) {
      neighbor_ids.clear();
      for (int u : g.neighbors(v)) {
        neighbor_ids.push_back(id[static_cast<std::size_t>(u)]);
      }
      std::sort(neighbor_ids.begin(), neighbor_ids.end());
      std::uint64_t h = splitmix64(id[static_cast<std::size_t>(v)]);
      for (std::uint64_t x : neighbor_ids) h = splitmix64(h ^ x);
      next[static_cast<std::size_t>(v)] = h;
    }
    id = next;
    for (int v = 0; v < n; ++v) {
      const auto& balls = ball_size[static_cast<std::size_t>(v)];
      if (balls[static_cast<std::size_t>(r)] >
          balls[static_cast<std::size_t>(r) - 1]) {
        fp.set(static_cast<int>(id[static_cast<std::size_t>(v)] &
                                static_cast<std::uint64_t>(mask)));
      }
    }
  }
  return fp;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.width_ != b.width_) {
    throw InputError("fingerprint width mismatch: " +
                     std::to_string(a.width_) + " vs " +
                     std::to_string(b.width_));
  }
  int both = 0;
  int either = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    both += std::popcount(a.words_[i] & b.words_[i]);
    either += std::popcount(a.words_[i] | b.words_[i]);
  }
  if (either == 0) {
    throw InputError("tanimoto undefined for two empty fingerprints");
  }
  return static_cast<double>(both) / static_cast<double>(either);
}

DegeneracyProfile degeneracy_profile(std::span<const double> values) {
  if (values.empty()) {
    throw InputError("degeneracy profile of an empty list");
  }
  std::map<long long, int> counts;
  for (double v : values) {
    if (!(std::abs(v) <= 1e6)) {
      throw InputError("value out of range for 12-decimal rounding");
    }
    ++counts[std::llround(v * 1e12)];
  }
  DegeneracyProfile profile;
  profile.distinct = static_cast<int>(counts.size());
  for (const auto& [key, count] : counts) {
    profile.max_multiplicity = std::max(profile.max_multiplicity, count);
  }
  return profile;
}

} // namespace graphsim
