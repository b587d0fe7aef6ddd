// Acceptance gate: ten end-to-end checks over the whole library, each
// reported on one PASS/FAIL line. Exit code = number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graphsim/analysis.hpp"
#include "graphsim/edit_distance.hpp"
#include "graphsim/enumeration.hpp"
#include "graphsim/experiments.hpp"
#include "graphsim/indices.hpp"
#include "graphsim/similarity.hpp"
#include "graphsim/spectral.hpp"
#include "support/oracles.hpp"

using namespace graphsim;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  require(in.good(), "cannot open " + p.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir =
      std::filesystem::temp_directory_path() / "graphsim_acceptance" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Families and tables shared between criteria; computed on first use so
// a failure surfaces in the criterion that needed the data.
struct Shared {
  std::vector<Graph> t7, n7, decanes;
  double n7_enumeration_seconds = -1.0;
  PairTable n7_s2;
  double n7_sweep_seconds = -1.0;

  const std::vector<Graph>& get_t7() {
    if (t7.empty()) t7 = enumerate_trees(7);
    return t7;
  }
  const std::vector<Graph>& get_n7() {
    if (n7.empty()) {
      const Stopwatch timer;
      n7 = enumerate_connected_graphs(7);
      n7_enumeration_seconds = timer.seconds();
    }
    return n7;
  }
  const std::vector<Graph>& get_decanes() {
    if (decanes.empty()) decanes = enumerate_trees(10, 4);
    return decanes;
  }
  const PairTable& get_n7_s2() {
    if (n7_s2.rows.empty()) {
      SimilarityConfig cfg; // core set, p = 2, per-graph scaling
      const Stopwatch timer;
      n7_s2 = pair_table(get_n7(), cfg);
      n7_sweep_seconds = timer.seconds();
    }
    return n7_s2;
  }
};

Shared shared;

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// ---------------------------------------------------------------- 1
std::string check_family_counts() {
  require(shared.get_t7().size() == 11,
          "expected 11 trees on 7 vertices, got " +
              std::to_string(shared.get_t7().size()));
  require(shared.get_n7().size() == 853,
          "expected 853 connected graphs on 7 vertices, got " +
              std::to_string(shared.get_n7().size()));
  require(shared.get_decanes().size() == 75,
          "expected 75 degree-capped trees on 10 vertices, got " +
              std::to_string(shared.get_decanes().size()));
  require(shared.n7_enumeration_seconds < 300.0,
          "7-vertex enumeration took " + fmt(shared.n7_enumeration_seconds) +
              " s (budget 300 s)");
  return "11 trees, 853 connected graphs (" +
         fmt(shared.n7_enumeration_seconds) + " s), 75 decane skeletons";
}

// ---------------------------------------------------------------- 2
std::string check_pair_counts() {
  SimilarityConfig cfg;
  const PairTable t7_table = pair_table(shared.get_t7(), cfg);
  require(t7_table.rows.size() == 55, "expected 55 tree pairs, got " +
                                          std::to_string(t7_table.rows.size()));
  const PairTable& n7_table = shared.get_n7_s2();
  require(n7_table.rows.size() == 363378,
          "expected 363378 pairs, got " +
              std::to_string(n7_table.rows.size()));
  require(shared.n7_sweep_seconds < 300.0,
          "s_2 sweep took " + fmt(shared.n7_sweep_seconds) +
              " s (budget 300 s)");
  return "55 and 363378 rows, full sweep in " + fmt(shared.n7_sweep_seconds) +
         " s";
}

// ---------------------------------------------------------------- 3
std::string check_core_extended_correlation() {
  const auto dir = fresh_dir("t7");
  const T7Experiment run = run_experiment_t7(dir);
  require(run.correlation.r >= 0.99,
          "r = " + fmt(run.correlation.r) + " < 0.99");
  const nlohmann::json meta = nlohmann::json::parse(slurp(dir / "t7.meta.json"));
  require(meta.contains("r_per_graph") && meta.contains("r_per_family"),
          "metadata missing one of the per-mode correlations");
  return "r = " + fmt(run.r_per_graph) + " per-graph, " +
         fmt(run.r_per_family) + " per-family";
}

// ---------------------------------------------------------------- 4
std::string check_index_oracles() {
  double worst = 0.0;
  std::size_t values = 0;
  for (const std::vector<Graph>* family :
       {&shared.get_n7(), &shared.get_decanes()}) {
    for (const Graph& g : *family) {
      const IndexVector vec = compute_vector(g, IndexSet::Extended);
      for (std::size_t i = 0; i < vec.size(); ++i) {
        const double expected = oracles::naive_index(g, vec.ids[i]);
        const double dev = std::abs(vec.values[i] - expected) /
                           std::max(1.0, std::abs(expected));
        worst = std::max(worst, dev);
        require(close_rel(vec.values[i], expected, 1e-9),
                std::string(index_name(vec.ids[i])) + " of " + g.label() +
                    ": " + fmt(vec.values[i]) + " vs oracle " +
                    fmt(expected));
        ++values;
      }
    }
  }
  return std::to_string(values) + " values across 928 graphs, max rel dev " +
         fmt(worst);
}

// ---------------------------------------------------------------- 5
std::string check_spectral_sanity() {
  double worst_trace = 0.0, worst_frobenius = 0.0;
  std::size_t graphs = 0;
  for (const std::vector<Graph>* family :
       {&shared.get_t7(), &shared.get_n7(), &shared.get_decanes()}) {
    for (const Graph& g : *family) {
      const SpectralDecomposition dec = eigenvalues(g);
      double sum = 0.0, sum_sq = 0.0;
      for (double lambda : dec.eigenvalues) {
        sum += lambda;
        sum_sq += lambda * lambda;
      }
      const double edges2 = 2.0 * g.edge_count();
      require(std::abs(sum) <= 1e-8 * g.vertex_count(),
              g.label() + ": eigenvalue sum " + fmt(sum));
      require(std::abs(sum_sq - edges2) <= 1e-6 * (1.0 + edges2),
              g.label() + ": eigenvalue square sum " + fmt(sum_sq) +
                  " vs twice the edge count " + fmt(edges2));
      worst_trace = std::max(worst_trace, std::abs(sum));
      worst_frobenius = std::max(worst_frobenius, std::abs(sum_sq - edges2));
      ++graphs;
    }
  }

  // Exact characteristic-polynomial roots for every graph with n <= 4.
  std::size_t small = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      std::vector<double> exact = oracles::charpoly_eigenvalues(g);
      std::sort(exact.begin(), exact.end(), std::greater<>());
      const SpectralDecomposition dec = eigenvalues(g);
      require(dec.eigenvalues.size() == exact.size(),
              g.label() + ": eigenvalue count mismatch");
      for (std::size_t i = 0; i < exact.size(); ++i) {
        require(std::abs(dec.eigenvalues[i] - exact[i]) <= 1e-8,
                g.label() + ": eigenvalue " + std::to_string(i) + " = " +
                    fmt(dec.eigenvalues[i]) + " vs exact root " +
                    fmt(exact[i]));
      }
      ++small;
    }
  }
  return std::to_string(graphs) + " spectra (max |trace| " + fmt(worst_trace) +
         ", max Frobenius gap " + fmt(worst_frobenius) + "), " +
         std::to_string(small) + " graphs against exact roots";
}

// ---------------------------------------------------------------- 6
std::string check_measure_axioms() {
  const double bound2 = std::pow(6.0, 0.5);
  for (const PairRow& row : shared.get_n7_s2().rows) {
    require(row.distance >= 0.0, row.label_a + "," + row.label_b +
                                     ": negative distance " +
                                     fmt(row.distance));
    require(row.distance <= bound2 + 1e-12,
            row.label_a + "," + row.label_b + ": distance " +
                fmt(row.distance) + " above the bound");
    require(row.similarity >= 0.0 && row.similarity <= 1.0,
            row.label_a + "," + row.label_b + ": similarity " +
                fmt(row.similarity) + " outside [0,1]");
  }

  SimilarityConfig cfg; // core, p = 2, per-graph
  for (const Graph& g : shared.get_n7()) {
    require(similarity_p(g, g, cfg) == 1.0,
            g.label() + ": self-similarity is not exactly 1");
  }

  std::mt19937_64 rng(20250819);
  const std::vector<Graph>& n7 = shared.get_n7();
  for (int trial = 0; trial < 300; ++trial) {
    const Graph& a = n7[rng() % n7.size()];
    const Graph& b = n7[rng() % n7.size()];
    require(similarity_p(a, b, cfg) == similarity_p(b, a, cfg),
            a.label() + "," + b.label() + ": asymmetric similarity");
  }

  // Random pool, both exponents, distances straight from the scaled
  // vectors so the d-to-s conversion is exercised independently.
  std::vector<Graph> pool;
  std::vector<ScaledVector> scaled;
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng() % 7);
    pool.push_back(oracles::random_connected_graph(rng, n));
    scaled.push_back(
        scale(compute_vector(pool.back(), IndexSet::Core), ScalingMode::PerGraph));
  }
  for (const double p : {1.0, 2.0}) {
    const double bound = std::pow(6.0, 1.0 / p);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t i = rng() % pool.size();
      const std::size_t j = rng() % pool.size();
      const double d = distance_p(scaled[i], scaled[j], p);
      require(d >= 0.0, "negative distance");
      require(d <= bound + 1e-12, "distance " + fmt(d) + " above " +
                                      fmt(bound) + " at p = " + fmt(p));
      require(distance_p(scaled[j], scaled[i], p) == d, "asymmetric distance");
      if (i == j) require(d == 0.0, "nonzero self-distance");
      const double s = similarity_from_distance(d, bound);
      require(s >= 0.0 && s <= 1.0, "similarity outside [0,1]");
      SimilarityConfig pcfg;
      pcfg.p = p;
      require(std::abs(similarity_p(pool[i], pool[j], pcfg) - s) <= 1e-12,
              "similarity disagrees with its distance");
    }
  }

  // Isomorphic pairs score 1 within floating-point noise.
  double worst_iso = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph& g = pool[rng() % pool.size()];
    const double s = similarity_p(g, oracles::random_relabeling(g, rng), cfg);
    worst_iso = std::min(worst_iso, s);
    require(s >= 1.0 - 1e-12 && s <= 1.0 + 1e-12,
            "isomorphic pair scored " + fmt(s));
  }
  return "363378 exhaustive pairs + 2000 random pairs + 100 isomorphic pairs"
         " (min " +
         fmt(worst_iso) + ")";
}

// ---------------------------------------------------------------- 7
std::string check_edit_distance() {
  const std::vector<Graph> n5 = enumerate_connected_graphs(5);
  require(n5.size() == 21, "expected 21 graphs on 5 vertices");
  for (std::size_t i = 0; i < n5.size(); ++i) {
    for (std::size_t j = 0; j < n5.size(); ++j) {
      const int d = ged(n5[i], n5[j]).ged;
      require(d == ged(n5[j], n5[i]).ged,
              n5[i].label() + "," + n5[j].label() + ": asymmetric");
      require((d == 0) == (i == j),
              n5[i].label() + "," + n5[j].label() + ": zero-iff-isomorphic");
    }
  }

  std::mt19937_64 rng(20250820);
  std::vector<Graph> pool;
  for (int i = 0; i < 60; ++i) {
    pool.push_back(
        oracles::random_connected_graph(rng, 3 + static_cast<int>(rng() % 4)));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const Graph& a = pool[rng() % pool.size()];
    const Graph& b = pool[rng() % pool.size()];
    const Graph& c = pool[rng() % pool.size()];
    const int ab = ged(a, b).ged, bc = ged(b, c).ged, ac = ged(a, c).ged;
    require(ac <= ab + bc, "triangle inequality violated: " +
                               std::to_string(ac) + " > " +
                               std::to_string(ab) + " + " +
                               std::to_string(bc));
  }

  const std::vector<Graph>& t7 = shared.get_t7();
  for (std::size_t i = 0; i < t7.size(); ++i) {
    for (std::size_t j = i + 1; j < t7.size(); ++j) {
      const int d = ged(t7[i], t7[j]).ged;
      require(d == oracles::ged_bijection_oracle(t7[i], t7[j]),
              t7[i].label() + "," + t7[j].label() +
                  ": disagrees with the bijection oracle");
      require(s_ged(t7[i], t7[j]) == 1.0 / (d + 1),
              t7[i].label() + "," + t7[j].label() +
                  ": s_ged is not exactly 1/(ged+1)");
    }
  }
  return "210 exhaustive pairs, 500 triangle triples, 55 tree pairs vs "
         "brute force";
}

// ---------------------------------------------------------------- 8
std::string check_random_model_trend() {
  const auto model_of = [](const std::string& label) {
    return label[0] == 'E' ? 0 : label[0] == 'B' ? 1 : 2;
  };
  int seeds_checked = 0;
  for (std::uint64_t seed = 20250101; seed <= 20250105; ++seed) {
    const auto dir = fresh_dir("random_" + std::to_string(seed));
    const RandomExperiment run = run_experiment_random(dir, seed);
    double sum[3][3] = {};
    int count[3][3] = {};
    double min_cross_er_ba = 2.0, min_within = 2.0;
    for (const PairRow& row : run.s2_table.rows) {
      int a = model_of(row.label_a), b = model_of(row.label_b);
      if (a > b) std::swap(a, b);
      sum[a][b] += row.similarity;
      ++count[a][b];
      if (a == 0 && b == 1) min_cross_er_ba = std::min(min_cross_er_ba, *row.rescaled);
      if (a == b) min_within = std::min(min_within, *row.rescaled);
    }
    const auto mean = [&](int a, int b) { return sum[a][b] / count[a][b]; };
    const std::string tag = " (base seed " + std::to_string(seed) + ")";
    require(mean(0, 0) > mean(0, 1) && mean(0, 0) > mean(0, 2),
            "within-ER mean does not dominate its cross means" + tag);
    require(mean(1, 1) > mean(0, 1) && mean(1, 1) > mean(1, 2),
            "within-BA mean does not dominate its cross means" + tag);
    require(min_cross_er_ba < min_within,
            "minimum ER-BA scaled similarity is not below every "
            "within-model scaled similarity" + tag);
    ++seeds_checked;
  }
  return std::to_string(seeds_checked) +
         " base seeds: within-model means dominate, ER-BA pairs reach the "
         "scaled minimum";
}

// ---------------------------------------------------------------- 9
std::string check_decane_degeneracy() {
  const auto dir = fresh_dir("decane");
  const DecaneExperiment run = run_experiment_decane(dir);
  require(run.skeleton_count == 75, "expected 75 skeletons");
  require(run.s2_values.size() == 2775, "expected 2775 pairs");
  require(run.s2_profile.distinct >= run.tanimoto_profile.distinct,
          "s_2 is more degenerate than the fingerprint: " +
              std::to_string(run.s2_profile.distinct) + " vs " +
              std::to_string(run.tanimoto_profile.distinct) +
              " distinct values");
  return "s_2 " + std::to_string(run.s2_profile.distinct) +
         " distinct (largest tie " +
         std::to_string(run.s2_profile.max_multiplicity) + "), Tanimoto " +
         std::to_string(run.tanimoto_profile.distinct) +
         " distinct (largest tie " +
         std::to_string(run.tanimoto_profile.max_multiplicity) + "), r = " +
         fmt(run.correlation.r);
}

// ---------------------------------------------------------------- 10
std::string check_reproducibility() {
  int files = 0;
  const auto compare = [&files](const std::filesystem::path& a,
                                const std::filesystem::path& b,
                                std::initializer_list<const char*> names) {
    for (const char* name : names) {
      require(slurp(a / name) == slurp(b / name),
              std::string(name) + " differs between reruns");
      ++files;
    }
  };

  const auto t7_a = fresh_dir("repro_t7_a"), t7_b = fresh_dir("repro_t7_b");
  run_experiment_t7(t7_a, ScalingMode::PerGraph, 1);
  run_experiment_t7(t7_b, ScalingMode::PerGraph, 3);
  compare(t7_a, t7_b, {"t7_core.csv", "t7_extended.csv", "t7.meta.json"});

  const auto rnd_a = fresh_dir("repro_rnd_a"), rnd_b = fresh_dir("repro_rnd_b");
  run_experiment_random(rnd_a, 20250101, 1);
  run_experiment_random(rnd_b, 20250101, 3);
  compare(rnd_a, rnd_b,
          {"random_s2.csv", "random_matrix.csv", "random.meta.json"});

  const auto n7_a = fresh_dir("repro_n7_a"), n7_b = fresh_dir("repro_n7_b");
  run_experiment_n7(n7_a, ScalingMode::PerGraph, 1);
  run_experiment_n7(n7_b, ScalingMode::PerGraph, 3);
  compare(n7_a, n7_b, {"n7_s1.csv", "n7_s2.csv", "n7_s1_sorted.csv",
                       "n7_s2_sorted.csv", "n7.meta.json"});

  const auto dec_a = fresh_dir("repro_dec_a"), dec_b = fresh_dir("repro_dec_b");
  run_experiment_decane(dec_a, 1);
  run_experiment_decane(dec_b, 3);
  compare(dec_a, dec_b, {"decane_pairs.csv", "decane.meta.json"});

  return std::to_string(files) +
         " output files byte-identical across reruns and worker counts";
}

int run_criterion(int id, const char* title,
                  const std::function<std::string()>& body) {
  try {
    const std::string detail = body();
    std::printf("[%2d] PASS %s: %s\n", id, title, detail.c_str());
    return 0;
  } catch (const std::exception& e) {
    std::printf("[%2d] FAIL %s: %s\n", id, title, e.what());
    return 1;
  }
}

} // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "family counts", check_family_counts);
  failures += run_criterion(2, "pair counts", check_pair_counts);
  failures += run_criterion(3, "core vs extended correlation",
                            check_core_extended_correlation);
  failures += run_criterion(4, "index oracle equivalence", check_index_oracles);
  failures += run_criterion(5, "spectral sanity", check_spectral_sanity);
  failures += run_criterion(6, "measure axioms", check_measure_axioms);
  failures += run_criterion(7, "edit distance oracle", check_edit_distance);
  failures += run_criterion(8, "random model discrimination",
                            check_random_model_trend);
  failures += run_criterion(9, "decane degeneracy direction",
                            check_decane_degeneracy);
  failures += run_criterion(10, "reproducibility", check_reproducibility);
  if (failures == 0) {
    std::printf("all 10 criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures;
}
