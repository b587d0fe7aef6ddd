#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"
#include "graphsim/indices.hpp"

namespace graphsim {

/// How raw index vectors are mapped into [0,1]^k before taking p-distances.
///
/// PerGraph is the literal reading of the defining formula: m and M are
/// the extrema over one graph's own k index values. PerFamily is the
/// conventional feature-scaling alternative: m_i and M_i are per-index
/// extrema across the whole compared family.
enum class ScalingMode { PerGraph, PerFamily };

/// Behavior when max == min makes the scaling denominator vanish.
enum class DegeneratePolicy { Strict, Lenient };

struct SimilarityConfig {
  IndexSet set = IndexSet::Core;
  double p = 2.0;
  ScalingMode scaling = ScalingMode::PerGraph;
};

/// Index vector scaled into [0,1]^k.
struct ScaledVector {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

/// Per-index extrema across a family (PerFamily scaling input).
struct FamilyScaleStats {
  std::vector<double> min_value;
  std::vector<double> max_value;
};

FamilyScaleStats family_index_stats(const std::vector<IndexVector>& raws);

/// Min-max scaling. PerGraph mode ignores `family`; PerFamily mode
/// requires it. Under the Strict policy a vanishing denominator throws;
/// under Lenient the affected components map to 0.
ScaledVector scale(const IndexVector& raw, ScalingMode mode,
                   const FamilyScaleStats* family = nullptr,
                   DegeneratePolicy policy = DegeneratePolicy::Strict);

/// p-distance (sum |x_i - y_i|^p)^(1/p) on equal-length vectors, p >= 1.
double distance_p(const ScaledVector& a, const ScaledVector& b, double p);

/// s_p = (k^{1/p} - d_p) / k^{1/p} for two graphs under the given config.
/// Under PerFamily scaling the pair itself is the family.
double similarity_p(const Graph& g1, const Graph& g2,
                    const SimilarityConfig& cfg);

/// s = (M - d)/M for a distance bounded by M > 0.
double similarity_from_distance(double d, double bound);

/// s = 1/(1 + d) for an unbounded distance d >= 0.
double similarity_from_unbounded_distance(double d);

/// d = 1 - s for s in [0,1].
double distance_from_similarity(double s);

struct PairRow {
  std::string label_a;
  std::string label_b;
  double distance = 0.0;
  double similarity = 0.0;
  std::optional<double> rescaled;
};

/// All-pairs similarity table over a family, sorted ascending by
/// similarity with a lexicographic (label_a, label_b) tie-break so the
/// emitted CSV is byte-reproducible.
struct PairTable {
  std::string family;
  SimilarityConfig config;
  std::vector<PairRow> rows;
};

/// C(m,2) rows over the family. Scaled vectors are computed in one
/// sequential pass; the pair sweep runs on `jobs` workers (0 = one per
/// hardware thread) writing into rank-indexed slots, so the result is
/// identical for every worker count.
PairTable pair_table(const std::vector<Graph>& family,
                     const SimilarityConfig& cfg, int jobs = 0);

/// Adds the min-max rescaled similarity column s' = (s - m)/(M - m).
/// Throws when all similarities coincide.
PairTable rescale_similarities(PairTable table);

} // namespace graphsim
