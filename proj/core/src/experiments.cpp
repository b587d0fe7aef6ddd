#include "graphsim/experiments.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

#include "graphsim/csv.hpp"
#include "graphsim/enumeration.hpp"
#include "graphsim/errors.hpp"
#include "graphsim/format.hpp"
#include "graphsim/random_models.hpp"
#include "graphsim/version.hpp"

namespace graphsim {
namespace {

using nlohmann::json;

const char* scaling_name(ScalingMode mode) {
  return mode == ScalingMode::PerGraph ? "per-graph" : "per-family";
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw InputError("cannot create output directory " + dir.string() +
                     ": " + ec.message());
  }
}

// Similarities of two tables over the same family, aligned on the
// sorted (label_a, label_b) key set.
std::pair<std::vector<double>, std::vector<double>> aligned_similarities(
    const PairTable& a, const PairTable& b) {
  std::map<std::pair<std::string, std::string>, double> right;
  for (const PairRow& row : b.rows) {
    right.emplace(std::make_pair(row.label_a, row.label_b), row.similarity);
  }
  std::map<std::pair<std::string, std::string>, double> left;
  for (const PairRow& row : a.rows) {
    left.emplace(std::make_pair(row.label_a, row.label_b), row.similarity);
  }
  if (left.size() != right.size() || left.size() != a.rows.size()) {
    throw InputError("pair tables do not share a common key set");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(left.size());
  ys.reserve(left.size());
  for (const auto& [key, value] : left) {
    const auto it = right.find(key);
    if (it == right.end()) {
      throw InputError("pair tables do not share a common key set");
    }
    xs.push_back(value);
    ys.push_back(it->second);
  }
  return {std::move(xs), std::move(ys)};
}

double correlate_tables(const PairTable& a, const PairTable& b) {
  const auto [xs, ys] = aligned_similarities(a, b);
  return pearson(xs, ys).r;
}

json extrema_json(const ExtremaReport& report,
                  const std::map<std::string, std::string>& certificates) {
  const auto pairs_json = [&](const auto& pairs) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) {
      json entry;
      entry["label_a"] = a;
      entry["label_b"] = b;
      const auto ca = certificates.find(a);
      const auto cb = certificates.find(b);
      if (ca != certificates.end()) entry["certificate_a"] = ca->second;
      if (cb != certificates.end()) entry["certificate_b"] = cb->second;
      arr.push_back(entry);
    }
    return arr;
  };
  json out;
  out["min_value"] = report.min_value;
  out["min_unique"] = report.min_unique;
  out["min_pairs"] = pairs_json(report.min_pairs);
  out["max_value"] = report.max_value;
  out["max_unique"] = report.max_unique;
  out["max_pairs"] = pairs_json(report.max_pairs);
  return out;
}

// Rank-vs-similarity curve of an already similarity-sorted table.
std::string sorted_curve_csv(const PairTable& table) {
  std::string out = "rank,s_p\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(table.rows[i].similarity);
    out += '\n';
  }
  return out;
}

void write_json(const std::filesystem::path& path, const json& value) {
  write_text_file(path, value.dump(2) + "\n");
}

} // namespace

T7Experiment run_experiment_t7(const std::filesystem::path& out_dir,
                               ScalingMode scaling, int jobs) {
  ensure_dir(out_dir);
  const std::vector<Graph> family = enumerate_trees(7);

  const auto table_for = [&](IndexSet set, ScalingMode mode) {
    SimilarityConfig cfg;
    cfg.set = set;
    cfg.p = 2.0;
    cfg.scaling = mode;
    PairTable table = pair_table(family, cfg, jobs);
    table.family = "t7";
    return table;
  };

  T7Experiment result;
  result.core_table = table_for(IndexSet::Core, scaling);
  result.extended_table = table_for(IndexSet::Extended, scaling);
  result.correlation.r = correlate_tables(result.core_table,
                                          result.extended_table);
  result.correlation.n_points =
      static_cast<int>(result.core_table.rows.size());
  result.correlation.series_a = std::string("s2/core/") +
                                scaling_name(scaling);
  result.correlation.series_b = std::string("s2/extended/") +
                                scaling_name(scaling);

  for (const ScalingMode mode : {ScalingMode::PerGraph,
                                 ScalingMode::PerFamily}) {
    const double r =
        mode == scaling
            ? result.correlation.r
            : correlate_tables(table_for(IndexSet::Core, mode),
                               table_for(IndexSet::Extended, mode));
    (mode == ScalingMode::PerGraph ? result.r_per_graph
                                   : result.r_per_family) = r;
  }

  write_text_file(out_dir / "t7_core.csv", pair_table_csv(result.core_table));
  write_text_file(out_dir / "t7_extended.csv",
                  pair_table_csv(result.extended_table));

  json meta;
  meta["experiment"] = "t7";
  meta["family_size"] = family.size();
  meta["pairs"] = result.core_table.rows.size();
  meta["p"] = 2.0;
  meta["scaling"] = scaling_name(scaling);
  meta["r"] = result.correlation.r;
  meta["r_per_graph"] = result.r_per_graph;
  meta["r_per_family"] = result.r_per_family;
  meta["version"] = kVersion;
  write_json(out_dir / "t7.meta.json", meta);
  return result;
}

N7Experiment run_experiment_n7(const std::filesystem::path& out_dir,
                               ScalingMode scaling, int jobs) {
  ensure_dir(out_dir);
  const std::vector<Graph> family = enumerate_connected_graphs(7);

  N7Experiment result;
  result.family_size = family.size();
  for (const double p : {1.0, 2.0}) {
    SimilarityConfig cfg;
    cfg.set = IndexSet::Core;
    cfg.p = p;
    cfg.scaling = scaling;
    PairTable table = pair_table(family, cfg, jobs);
    table.family = "n7";
    (p == 1.0 ? result.s1_table : result.s2_table) = std::move(table);
  }
  result.extrema_s1 = extrema_pairs(result.s1_table);
  result.extrema_s2 = extrema_pairs(result.s2_table);

  write_text_file(out_dir / "n7_s1.csv", pair_table_csv(result.s1_table));
  write_text_file(out_dir / "n7_s2.csv", pair_table_csv(result.s2_table));
  write_text_file(out_dir / "n7_s1_sorted.csv",
                  sorted_curve_csv(result.s1_table));
  write_text_file(out_dir / "n7_s2_sorted.csv",
                  sorted_curve_csv(result.s2_table));

  std::map<std::string, std::string> certificates;
  const auto collect = [&](const ExtremaReport& report) {
    for (const auto& pairs : {report.min_pairs, report.max_pairs}) {
      for (const auto& [a, b] : pairs) {
        certificates.emplace(a, "");
        certificates.emplace(b, "");
      }
    }
  };
  collect(result.extrema_s1);
  collect(result.extrema_s2);
  for (const Graph& g : family) {
    const auto it = certificates.find(g.label());
    if (it != certificates.end()) it->second = canonical_certificate(g);
  }

  json meta;
  meta["experiment"] = "n7";
  meta["family_size"] = family.size();
  meta["pairs"] = result.s2_table.rows.size();
  meta["scaling"] = scaling_name(scaling);
  meta["extrema_s1"] = extrema_json(result.extrema_s1, certificates);
  meta["extrema_s2"] = extrema_json(result.extrema_s2, certificates);
  meta["version"] = kVersion;
  write_json(out_dir / "n7.meta.json", meta);
  return result;
}

RandomExperiment run_experiment_random(const std::filesystem::path& out_dir,
                                       std::uint64_t base_seed, int jobs) {
  ensure_dir(out_dir);

  std::vector<Graph> networks;
  json network_meta = json::array();
  const ModelSpec protos[3] = {ModelSpec::er(100, 0.1, 0),
                               ModelSpec::ba(100, 3, 0),
                               ModelSpec::ws(100, 6, 0.7, 0)};
  for (int b = 0; b < 3; ++b) {
    // Seed blocks of 3 per model: ER gets base+0..2, BA base+3..5,
    // WS base+6..8.
    const std::uint64_t block_seed =
        base_seed + static_cast<std::uint64_t>(3 * b);
    std::vector<Graph> batch = generate_batch(protos[b], 3, block_seed);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ModelSpec spec = protos[b];
      spec.seed = block_seed + i;
      json entry;
      entry["label"] = batch[i].label();
      entry["spec"] = describe(spec);
      entry["seed"] = spec.seed;
      entry["edges"] = batch[i].edge_count();
      network_meta.push_back(entry);
    }
    for (Graph& g : batch) networks.push_back(std::move(g));
  }

  SimilarityConfig cfg;
  cfg.set = IndexSet::Core;
  cfg.p = 2.0;
  cfg.scaling = ScalingMode::PerGraph;
  PairTable table = pair_table(networks, cfg, jobs);
  table.family = "random";
  table = rescale_similarities(std::move(table));

  RandomExperiment result;
  for (const Graph& g : networks) result.labels.push_back(g.label());
  result.s2_table = std::move(table);

  write_text_file(out_dir / "random_s2.csv",
                  pair_table_csv(result.s2_table));

  // Lower-triangular matrix of s_2' values: columns are all labels but
  // the last, rows start from the second label.
  std::map<std::pair<std::string, std::string>, double> rescaled;
  for (const PairRow& row : result.s2_table.rows) {
    rescaled.emplace(std::make_pair(row.label_a, row.label_b),
                     *row.rescaled);
    rescaled.emplace(std::make_pair(row.label_b, row.label_a),
                     *row.rescaled);
  }
  std::string matrix;
  for (std::size_t c = 0; c + 1 < result.labels.size(); ++c) {
    matrix += ',';
    matrix += result.labels[c];
  }
  matrix += '\n';
  for (std::size_t r = 1; r < result.labels.size(); ++r) {
    matrix += result.labels[r];
    for (std::size_t c = 0; c + 1 < result.labels.size(); ++c) {
      matrix += ',';
      if (c < r) {
        matrix += format_double(
            rescaled.at({result.labels[r], result.labels[c]}));
      }
    }
    matrix += '\n';
  }
  write_text_file(out_dir / "random_matrix.csv", matrix);

  json meta;
  meta["experiment"] = "random";
  meta["base_seed"] = base_seed;
  meta["generator"] = kGeneratorId;
  meta["networks"] = network_meta;
  meta["pairs"] = result.s2_table.rows.size();
  meta["scaling"] = scaling_name(cfg.scaling);
  meta["version"] = kVersion;
  write_json(out_dir / "random.meta.json", meta);
  return result;
}

DecaneExperiment run_experiment_decane(const std::filesystem::path& out_dir,
                                       int jobs) {
  ensure_dir(out_dir);
  const std::vector<Graph> family = enumerate_trees(10, 4);

  SimilarityConfig cfg;
  cfg.set = IndexSet::Core;
  cfg.p = 2.0;
  cfg.scaling = ScalingMode::PerGraph;
  PairTable table = pair_table(family, cfg, jobs);
  table.family = "decane";

  std::map<std::pair<std::string, std::string>, double> s2;
  for (const PairRow& row : table.rows) {
    s2.emplace(std::make_pair(row.label_a, row.label_b), row.similarity);
  }

  constexpr int kRadius = 2;
  constexpr int kBits = 2048;
  std::vector<Fingerprint> prints;
  prints.reserve(family.size());
  for (const Graph& g : family) {
    prints.push_back(morgan_fingerprint(g, kRadius, kBits));
  }

  DecaneExperiment result;
  result.skeleton_count = family.size();
  std::string csv = "label_a,label_b,s2,tanimoto_morgan\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double s = s2.at({family[i].label(), family[j].label()});
      const double t = tanimoto(prints[i], prints[j]);
      result.s2_values.push_back(s);
      result.tanimoto_values.push_back(t);
      csv += family[i].label();
      csv += ',';
      csv += family[j].label();
      csv += ',';
      csv += format_double(s);
      csv += ',';
      csv += format_double(t);
      csv += '\n';
    }
  }
  write_text_file(out_dir / "decane_pairs.csv", csv);

  result.correlation = pearson(result.s2_values, result.tanimoto_values);
  result.correlation.series_a = "s2/core/per-graph";
  result.correlation.series_b = "tanimoto/morgan-r2-2048";
  result.s2_profile = degeneracy_profile(result.s2_values);
  result.tanimoto_profile = degeneracy_profile(result.tanimoto_values);

  json meta;
  meta["experiment"] = "decane";
  meta["skeletons"] = family.size();
  meta["pairs"] = result.s2_values.size();
  meta["fingerprint"] = {{"radius", kRadius}, {"bits", kBits}};
  meta["pearson_r"] = result.correlation.r;
  meta["s2_degeneracy"] = {{"distinct", result.s2_profile.distinct},
                           {"max_multiplicity",
                            result.s2_profile.max_multiplicity}};
  meta["tanimoto_degeneracy"] = {
      {"distinct", result.tanimoto_profile.distinct},
      {"max_multiplicity", result.tanimoto_profile.max_multiplicity}};
  meta["version"] = kVersion;
  write_json(out_dir / "decane.meta.json", meta);
  return result;
}

} // namespace graphsim
