#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim {

enum class Model { ER, BA, WS };

/// "ER" | "BA" | "WS".
const char* model_name(Model model);

/// A fully specified random-graph draw. Parameter constraints
/// (checked by generate): ER 0 <= p <= 1; BA 1 <= m < n;
/// WS k even, 2 <= k < n, 0 <= p <= 1.
struct ModelSpec {
  Model model = Model::ER;
  int n = 1;
  double p = 0.0;        // ER edge probability / WS rewiring probability
  int m = 0;             // BA edges per new node
  int k = 0;             // WS ring degree
  std::uint64_t seed = 0;

  static ModelSpec er(int n, double p, std::uint64_t seed);
  static ModelSpec ba(int n, int m, std::uint64_t seed);
  static ModelSpec ws(int n, int k, double p, std::uint64_t seed);
};

/// Human-readable spec, e.g. "ER(n=100, p=0.1, seed=42)".
std::string describe(const ModelSpec& spec);

/// Identifies the frozen pseudo-random pipeline (generator algorithm,
/// draw derivations, scan orders). Recorded in output metadata;
/// changing any of it requires a new identifier.
inline constexpr const char* kGeneratorId = "mt19937_64-v1";

/// One connected graph, bit-reproducible from the spec alone.
/// Disconnected draws are redrawn with a derived sub-seed, at most 1000
/// attempts, then BudgetError naming the spec.
///
/// ER: each of the C(n,2) vertex pairs gets an edge independently with
/// probability p, scanned in lexicographic order.
/// BA: complete graph on m+1 vertices, then each new vertex attaches to
/// m distinct existing vertices sampled degree-proportionally
/// (repeated draws with rejection). Edge count is C(m+1,2) + m(n-m-1).
/// WS: ring lattice joining each vertex to k/2 neighbors per side; each
/// edge's far endpoint is rewired with probability p to a uniform
/// non-neighbor; rewires that cannot avoid self-loops or multi-edges
/// are skipped. Edge count is exactly nk/2.
Graph generate(const ModelSpec& spec);

/// Graphs drawn with seeds base_seed+0 .. base_seed+count-1 (spec.seed
/// is ignored), labeled "<MODEL>_<index>" with 1-based index.
std::vector<Graph> generate_batch(const ModelSpec& spec, int count,
                                  std::uint64_t base_seed);

} // namespace graphsim
