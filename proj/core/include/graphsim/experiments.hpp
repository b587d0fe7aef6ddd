#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "graphsim/analysis.hpp"
#include "graphsim/fingerprints.hpp"
#include "graphsim/similarity.hpp"

namespace graphsim {

/// Trees on 7 vertices: s_2 with the 6-index core set against s_2 with
/// the 10-index extended set. Writes t7_core.csv and t7_extended.csv
/// (55 rows each, under `scaling`) plus t7.meta.json, which records the
/// correlation under BOTH scaling modes.
struct T7Experiment {
  PairTable core_table;
  PairTable extended_table;
  CorrelationReport correlation; // under `scaling`
  double r_per_graph = 0.0;
  double r_per_family = 0.0;
};
T7Experiment run_experiment_t7(const std::filesystem::path& out_dir,
                               ScalingMode scaling = ScalingMode::PerGraph,
                               int jobs = 0);

/// All 853 connected graphs on 7 vertices: s_1 and s_2 pair tables
/// (363378 rows each), rank-vs-similarity curves for plotting, and the
/// extremal pairs of both tables with their graph certificates.
/// Writes n7_s1.csv, n7_s2.csv, n7_s1_sorted.csv, n7_s2_sorted.csv,
/// n7.meta.json.
struct N7Experiment {
  std::size_t family_size = 0;
  PairTable s1_table;
  PairTable s2_table;
  ExtremaReport extrema_s1;
  ExtremaReport extrema_s2;
};
N7Experiment run_experiment_n7(const std::filesystem::path& out_dir,
                               ScalingMode scaling = ScalingMode::PerGraph,
                               int jobs = 0);

/// Nine random networks (3 per model: ER n=100 p=0.1, BA n=100 m=3,
/// WS n=100 k=6 p=0.7, seeds base_seed+0..8 in model blocks of 3),
/// their 36-pair s_2 table with the min-max rescaled s_2' column, and
/// a lower-triangular matrix view. Writes random_s2.csv,
/// random_matrix.csv, random.meta.json.
struct RandomExperiment {
  std::vector<std::string> labels; // generation order, 9 entries
  PairTable s2_table;              // rescaled column filled
};
RandomExperiment run_experiment_random(
    const std::filesystem::path& out_dir,
    std::uint64_t base_seed = 20250101, int jobs = 0);

/// The 75 decane skeletons (trees on 10 vertices, max degree 4): s_2
/// against Morgan/Tanimoto similarity on all 2775 pairs, their Pearson
/// correlation, and both degeneracy profiles. Writes decane_pairs.csv
/// and decane.meta.json.
struct DecaneExperiment {
  std::size_t skeleton_count = 0;
  std::vector<double> s2_values;       // family pair order (i < j)
  std::vector<double> tanimoto_values; // aligned with s2_values
  CorrelationReport correlation;
  DegeneracyProfile s2_profile;
  DegeneracyProfile tanimoto_profile;
};
DecaneExperiment run_experiment_decane(const std::filesystem::path& out_dir,
                                       int jobs = 0);

} // namespace graphsim
