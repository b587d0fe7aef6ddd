#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphsim/analysis.hpp"
#include "graphsim/csv.hpp"
#include "graphsim/graph6.hpp"
#include "graphsim/enumeration.hpp"
#include "graphsim/errors.hpp"
#include "graphsim/experiments.hpp"
#include "graphsim/fingerprints.hpp"
#include "graphsim/format.hpp"
#include "graphsim/random_models.hpp"
#include "graphsim/similarity.hpp"
#include "graphsim/version.hpp"

namespace {

using namespace graphsim;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::string family_graph6(const std::vector<Graph>& family) {
  std::string out;
  for (const Graph& g : family) {
    out += encode_graph6(g);
    out += '\n';
  }
  return out;
}

ScalingMode parse_scaling(const std::string& name) {
  if (name == "per-graph") return ScalingMode::PerGraph;
  if (name == "per-family") return ScalingMode::PerFamily;
  throw InputError("unknown scaling mode '" + name +
                   "' (expected per-graph or per-family)");
}

IndexSet parse_index_set(const std::string& name) {
  if (name == "core") return IndexSet::Core;
  if (name == "extended") return IndexSet::Extended;
  throw InputError("unknown index set '" + name +
                   "' (expected core or extended)");
}

struct Cli {
  // indices / simmatrix / ged
  std::string in_path;
  std::string out_path;
  std::string index_set = "core";
  double p = 2.0;
  std::string scaling = "per-graph";
  int jobs = 0;
  bool rescale = false;

  // enumerate
  int n = 7;
  int max_degree = 0; // 0 = uncapped
  int carbons = 10;

  // generate
  double edge_p = 0.1;
  int attach_m = 3;
  int ring_k = 6;
  double rewire_p = 0.7;
  std::uint64_t seed = 42;
  int count = 1;

  // experiment
  std::string out_dir = "out";
  std::uint64_t base_seed = 20250101;
};

void run_indices(const Cli& cli) {
  const std::vector<Graph> family = load_family(cli.in_path);
  emit(index_table_csv(family, parse_index_set(cli.index_set)),
       cli.out_path);
}

void run_simmatrix(const Cli& cli) {
  const std::vector<Graph> family = load_family(cli.in_path);
  SimilarityConfig cfg;
  cfg.set = parse_index_set(cli.index_set);
  cfg.p = cli.p;
  cfg.scaling = parse_scaling(cli.scaling);
  PairTable table = pair_table(family, cfg, cli.jobs);
  table.family = std::filesystem::path(cli.in_path).stem().string();
  if (cli.rescale) table = rescale_similarities(std::move(table));
  emit(pair_table_csv(table), cli.out_path);
}

void run_ged(const Cli& cli) {
  const std::vector<Graph> family = load_family(cli.in_path);
  emit(ged_table_csv(family), cli.out_path);
}

void run_generate(Model model, const Cli& cli) {
  ModelSpec spec;
  switch (model) {
    case Model::ER:
      spec = ModelSpec::er(cli.n, cli.edge_p, cli.seed);
      break;
    case Model::BA:
      spec = ModelSpec::ba(cli.n, cli.attach_m, cli.seed);
      break;
    case Model::WS:
      spec = ModelSpec::ws(cli.n, cli.ring_k, cli.rewire_p, cli.seed);
      break;
  }
  const std::vector<Graph> batch =
      generate_batch(spec, cli.count, cli.seed);
  write_text_file(cli.out_path, family_graph6(batch));

  nlohmann::json meta;
  meta["count"] = cli.count;
  meta["generator"] = kGeneratorId;
  meta["model"] = model_name(model);
  nlohmann::json networks = nlohmann::json::array();
  for (int i = 0; i < cli.count; ++i) {
    ModelSpec one = spec;
    one.seed = cli.seed + static_cast<std::uint64_t>(i);
    nlohmann::json entry;
    entry["label"] = batch[static_cast<std::size_t>(i)].label();
    entry["seed"] = one.seed;
    entry["spec"] = describe(one);
    entry["edges"] = batch[static_cast<std::size_t>(i)].edge_count();
    networks.push_back(entry);
  }
  meta["networks"] = networks;
  meta["version"] = kVersion;
  write_text_file(cli.out_path + ".meta.json", meta.dump(2) + "\n");
}

void run_chemsim(const Cli& cli) {
  const std::vector<Graph> family = enumerate_trees(cli.carbons, 4);
  SimilarityConfig cfg;
  PairTable table = pair_table(family, cfg, cli.jobs);
  std::map<std::pair<std::string, std::string>, double> s2;
  for (const PairRow& row : table.rows) {
    s2.emplace(std::make_pair(row.label_a, row.label_b), row.similarity);
  }
  std::vector<Fingerprint> prints;
  prints.reserve(family.size());
  for (const Graph& g : family) prints.push_back(morgan_fingerprint(g));

  std::string csv = "label_a,label_b,s2,tanimoto_morgan\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      csv += family[i].label();
      csv += ',';
      csv += family[j].label();
      csv += ',';
      csv += format_double(s2.at({family[i].label(), family[j].label()}));
      csv += ',';
      csv += format_double(tanimoto(prints[i], prints[j]));
      csv += '\n';
    }
  }
  emit(csv, cli.out_path);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph similarity via vectors of topological indices"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Cli cli;

  CLI::App* indices = app.add_subcommand(
      "indices", "Per-graph topological index table for a graph6 file");
  indices->add_option("--in", cli.in_path, "graph6 input file")->required();
  indices->add_option("--indices", cli.index_set, "core|extended");
  indices->add_option("--out", cli.out_path, "output CSV (default stdout)");

  CLI::App* simmatrix = app.add_subcommand(
      "simmatrix", "All-pairs d_p/s_p table for a graph6 file");
  simmatrix->add_option("--in", cli.in_path, "graph6 input file")->required();
  simmatrix->add_option("--indices", cli.index_set, "core|extended");
  simmatrix->add_option("--p", cli.p, "distance exponent p >= 1");
  simmatrix->add_option("--scaling", cli.scaling, "per-graph|per-family");
  simmatrix->add_option("--jobs", cli.jobs, "worker threads (0 = auto)");
  simmatrix->add_flag("--rescale", cli.rescale,
                      "append min-max rescaled s_prime column");
  simmatrix->add_option("--out", cli.out_path, "output CSV (default stdout)");

  CLI::App* ged_cmd = app.add_subcommand(
      "ged", "Exact edit distance for every pair in a graph6 file");
  ged_cmd->add_option("--in", cli.in_path, "graph6 input file")->required();
  ged_cmd->add_option("--out", cli.out_path, "output CSV (default stdout)");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Enumerate a canonical graph family as graph6");
  enumerate->require_subcommand(1);
  CLI::App* enum_trees =
      enumerate->add_subcommand("trees", "Free trees on n vertices");
  enum_trees->add_option("--n", cli.n, "vertex count (1..12)")->required();
  enum_trees->add_option("--max-degree", cli.max_degree,
                         "optional degree cap (>= 2)");
  enum_trees->add_option("--out", cli.out_path,
                         "output graph6 file (default stdout)");
  CLI::App* enum_connected = enumerate->add_subcommand(
      "connected", "Connected graphs on n vertices");
  enum_connected->add_option("--n", cli.n, "vertex count (1..7)")->required();
  enum_connected->add_option("--out", cli.out_path,
                             "output graph6 file (default stdout)");
  CLI::App* enum_alkanes = enumerate->add_subcommand(
      "alkanes", "Carbon skeletons: trees with max degree 4");
  enum_alkanes->add_option("--carbons", cli.carbons, "carbon count (1..12)")
      ->required();
  enum_alkanes->add_option("--out", cli.out_path,
                           "output graph6 file (default stdout)");

  CLI::App* generate = app.add_subcommand(
      "generate", "Seeded random networks (graph6 + metadata sidecar)");
  generate->require_subcommand(1);
  CLI::App* gen_er = generate->add_subcommand("er", "Erdos-Renyi G(n,p)");
  gen_er->add_option("--n", cli.n, "node count")->required();
  gen_er->add_option("--p", cli.edge_p, "edge probability")->required();
  CLI::App* gen_ba =
      generate->add_subcommand("ba", "Barabasi-Albert preferential attachment");
  gen_ba->add_option("--n", cli.n, "node count")->required();
  gen_ba->add_option("--m", cli.attach_m, "edges per new node")->required();
  CLI::App* gen_ws =
      generate->add_subcommand("ws", "Watts-Strogatz rewired ring");
  gen_ws->add_option("--n", cli.n, "node count")->required();
  gen_ws->add_option("--k", cli.ring_k, "ring degree (even)")->required();
  gen_ws->add_option("--p", cli.rewire_p, "rewiring probability")->required();
  for (CLI::App* sub : {gen_er, gen_ba, gen_ws}) {
    sub->add_option("--seed", cli.seed, "base seed");
    sub->add_option("--count", cli.count, "graphs to generate");
    sub->add_option("--out", cli.out_path, "output graph6 file")->required();
  }

  CLI::App* experiment = app.add_subcommand(
      "experiment", "Reproduce a full study (CSV + metadata into --out-dir)");
  experiment->require_subcommand(1);
  CLI::App* exp_t7 = experiment->add_subcommand(
      "t7", "Trees on 7 vertices: core vs extended s_2 correlation");
  CLI::App* exp_n7 = experiment->add_subcommand(
      "n7", "Connected graphs on 7 vertices: s_1/s_2 sweeps and extrema");
  CLI::App* exp_random = experiment->add_subcommand(
      "random", "Nine seeded random networks, scaled s_2 matrix");
  CLI::App* exp_decane = experiment->add_subcommand(
      "decane", "75 decane skeletons: s_2 vs Morgan/Tanimoto");
  for (CLI::App* sub : {exp_t7, exp_n7, exp_random, exp_decane}) {
    sub->add_option("--out-dir", cli.out_dir, "output directory");
    sub->add_option("--jobs", cli.jobs, "worker threads (0 = auto)");
  }
  for (CLI::App* sub : {exp_t7, exp_n7}) {
    sub->add_option("--scaling", cli.scaling, "per-graph|per-family");
  }
  exp_random->add_option("--seed", cli.base_seed, "base seed");

  CLI::App* chemsim = app.add_subcommand(
      "chemsim", "s_2 vs Morgan/Tanimoto for all alkane-skeleton pairs");
  chemsim->add_option("--carbons", cli.carbons, "carbon count (1..12)");
  chemsim->add_option("--jobs", cli.jobs, "worker threads (0 = auto)");
  chemsim->add_option("--out", cli.out_path, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(indices)) {
      run_indices(cli);
    } else if (app.got_subcommand(simmatrix)) {
      run_simmatrix(cli);
    } else if (app.got_subcommand(ged_cmd)) {
      run_ged(cli);
    } else if (app.got_subcommand(enumerate)) {
      if (enumerate->got_subcommand(enum_trees)) {
        emit(family_graph6(enumerate_trees(
                 cli.n, cli.max_degree > 0
                            ? std::optional<int>(cli.max_degree)
                            : std::nullopt)),
             cli.out_path);
      } else if (enumerate->got_subcommand(enum_connected)) {
        emit(family_graph6(enumerate_connected_graphs(cli.n)), cli.out_path);
      } else {
        emit(family_graph6(enumerate_trees(cli.carbons, 4)), cli.out_path);
      }
    } else if (app.got_subcommand(generate)) {
      if (generate->got_subcommand(gen_er)) {
        run_generate(Model::ER, cli);
      } else if (generate->got_subcommand(gen_ba)) {
        run_generate(Model::BA, cli);
      } else {
        run_generate(Model::WS, cli);
      }
    } else if (app.got_subcommand(experiment)) {
      const ScalingMode mode = parse_scaling(cli.scaling);
      if (experiment->got_subcommand(exp_t7)) {
        run_experiment_t7(cli.out_dir, mode, cli.jobs);
      } else if (experiment->got_subcommand(exp_n7)) {
        run_experiment_n7(cli.out_dir, mode, cli.jobs);
      } else if (experiment->got_subcommand(exp_random)) {
        run_experiment_random(cli.out_dir, cli.base_seed, cli.jobs);
      } else {
        run_experiment_decane(cli.out_dir, cli.jobs);
      }
    } else if (app.got_subcommand(chemsim)) {
      run_chemsim(cli);
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
