#include "graphsim/random_models.hpp"

#include <algorithm>
#include <random>

#include "graphsim/errors.hpp"
#include "graphsim/format.hpp"

namespace graphsim {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Draws are hand-rolled on top of the raw 64-bit stream because the
// distributions in <random> are not pinned across standard libraries
// and the outputs here are a reproducibility contract (kGeneratorId).
double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

void validate(const ModelSpec& spec) {
  if (spec.n < 1) {
    throw InputError("node count must be >= 1 in " + describe(spec));
  }
  switch (spec.model) {
    case Model::ER:
      if (spec.p < 0.0 || spec.p > 1.0) {
        throw InputError("edge probability outside [0,1] in " +
                         describe(spec));
      }
      break;
    case Model::BA:
      if (spec.m < 1 || spec.m >= spec.n) {
        throw InputError("attachment count must satisfy 1 <= m < n in " +
                         describe(spec));
      }
      break;
    case Model::WS:
      if (spec.k < 2 || spec.k >= spec.n || spec.k % 2 != 0) {
        throw InputError("ring degree must be even with 2 <= k < n in " +
                         describe(spec));
      }
      if (spec.p < 0.0 || spec.p > 1.0) {
        throw InputError("rewiring probability outside [0,1] in " +
                         describe(spec));
      }
      break;
  }
}

Graph draw_er(const ModelSpec& spec, std::mt19937_64& rng) {
  Graph g(spec.n);
  for (int u = 0; u + 1 < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      if (uniform_double(rng) < spec.p) g.add_edge(u, v);
    }
  }
  return g;
}

Graph draw_ba(const ModelSpec& spec, std::mt19937_64& rng) {
  Graph g(spec.n);
  // One entry per degree unit; sampling an index uniformly is
  // degree-proportional vertex sampling.
  std::vector<int> repeated;
  repeated.reserve(static_cast<std::size_t>(2 * spec.m * spec.n));
  const int core = spec.m + 1;
  for (int u = 0; u < core; ++u) {
    for (int v = u + 1; v < core; ++v) g.add_edge(u, v);
    for (int i = 0; i < spec.m; ++i) repeated.push_back(u);
  }
  std::vector<int> targets;
  for (int v = core; v < spec.n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < spec.m) {
      const int t = repeated[static_cast<std::size_t>(
          uniform_int(rng, repeated.size()))];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (int t : targets) {
      g.add_edge(v, t);
      repeated.push_back(v);
      repeated.push_back(t);
    }
  }
  return g;
}

Graph draw_ws(const ModelSpec& spec, std::mt19937_64& rng) {
  const int n = spec.n;
  const int half = spec.k / 2;
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  const auto set_edge = [&](int a, int b, std::uint8_t on) {
    adj[static_cast<std::size_t>(a) * n + b] = on;
    adj[static_cast<std::size_t>(b) * n + a] = on;
    const int delta = on ? 1 : -1;
    deg[static_cast<std::size_t>(a)] += delta;
    deg[static_cast<std::size_t>(b)] += delta;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= half; ++j) set_edge(i, (i + j) % n, 1);
  }
  // Same scan order as construction; the far endpoint of (i, i+j) moves
  // to a uniform non-neighbor with probability p.
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= half; ++j) {
      if (uniform_double(rng) >= spec.p) continue;
      if (deg[static_cast<std::size_t>(i)] >= n - 1) continue; // no non-neighbor left
      const int far = (i + j) % n;
      int w;
      do {
        w = static_cast<int>(uniform_int(rng, static_cast<std::uint64_t>(n)));
      } while (w == i || adj[static_cast<std::size_t>(i) * n + w] != 0);
      set_edge(i, far, 0);
      set_edge(i, w, 1);
    }
  }
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[static_cast<std::size_t>(u) * n + v] != 0) g.add_edge(u, v);
    }
  }
  return g;
}

Graph draw(const ModelSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (spec.model) {
    case Model::ER:
      return draw_er(spec, rng);
    case Model::BA:
      return draw_ba(spec, rng);
    case Model::WS:
      return draw_ws(spec, rng);
  }
  throw InputError("unknown model");
}

} // namespace

const char* model_name(Model model) {
  switch (model) {
    case Model::ER:
      return "ER";
    case Model::BA:
      return "BA";
    case Model::WS:
      return "WS";
  }
  return "?";
}

ModelSpec ModelSpec::er(int n, double p, std::uint64_t seed) {
  ModelSpec s;
  s.model = Model::ER;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return s;
}

ModelSpec ModelSpec::ba(int n, int m, std::uint64_t seed) {
  ModelSpec s;
  s.model = Model::BA;
  s.n = n;
  s.m = m;
  s.seed = seed;
  return s;
}

ModelSpec ModelSpec::ws(int n, int k, double p, std::uint64_t seed) {
  ModelSpec s;
  s.model = Model::WS;
  s.n = n;
  s.k = k;
  s.p = p;
  s.seed = seed;
  return s;
}

std::string describe(const ModelSpec& spec) {
  std::string out = std::string(model_name(spec.model)) +
                    "(n=" + std::to_string(spec.n);
  switch (spec.model) {
    case Model::ER:
      out += ", p=" + format_double(spec.p);
      break;
    case Model::BA:
      out += ", m=" + std::to_string(spec.m);
      break;
    case Model::WS:
      out += ", k=" + std::to_string(spec.k) + ", p=" + format_double(spec.p);
      break;
  }
  out += ", seed=" + std::to_string(spec.seed) + ")";
  return out;
}

Graph generate(const ModelSpec& spec) {
  validate(spec);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::uint64_t seed =
        attempt == 0
            ? spec.seed
            : splitmix64(spec.seed ^
                         (0x9E3779B97F4A7C15ULL *
                          static_cast<std::uint64_t>(attempt)));
    Graph g = draw(spec, seed);
    if (is_connected(g)) return g;
  }
  throw BudgetError("1000 consecutive disconnected draws for " +
                    describe(spec));
}

std::vector<Graph> generate_batch(const ModelSpec& spec, int count,
                                  std::uint64_t base_seed) {
  if (count < 1) {
    throw InputError("batch count must be >= 1, got " +
                     std::to_string(count));
  }
  std::vector<Graph> batch;
  batch.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    ModelSpec one = spec;
    one.seed = base_seed + static_cast<std::uint64_t>(i);
    Graph g = generate(one);
    g.set_label(std::string(model_name(spec.model)) + "_" +
                std::to_string(i + 1));
    batch.push_back(std::move(g));
  }
  return batch;
}

} // namespace graphsim
