#include "graphsim/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_set>

#include "graphsim/errors.hpp"

namespace graphsim {

namespace {

int effective_jobs(int jobs, std::size_t work_items) {
  if (jobs <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    jobs = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs),
                            std::max<std::size_t>(work_items, 1)));
}

} // namespace

FamilyScaleStats family_index_stats(const std::vector<IndexVector>& raws) {
  if (raws.empty())
    throw InputError("family_index_stats requires at least one vector");
  const std::size_t k = raws.front().size();
  FamilyScaleStats stats;
  stats.min_value.assign(k, std::numeric_limits<double>::infinity());
  stats.max_value.assign(k, -std::numeric_limits<double>::infinity());
  for (const IndexVector& raw : raws) {
    if (raw.size() != k)
      throw InputError("family vectors have inconsistent lengths");
    for (std::size_t i = 0; i < k; ++i) {
      stats.min_value[i] = std::min(stats.min_value[i], raw.values[i]);
      stats.max_value[i] = std::max(stats.max_value[i], raw.values[i]);
    }
  }
  return stats;
}

ScaledVector scale(const IndexVector& raw, ScalingMode mode,
                   const FamilyScaleStats* family, DegeneratePolicy policy) {
  const std::size_t k = raw.size();
  if (k == 0)
    throw InputError("cannot scale an empty index vector");
  for (double v : raw.values)
    if (!std::isfinite(v))
      throw InputError("index vector contains a non-finite value");

  ScaledVector out;
  out.values.resize(k);
  if (mode == ScalingMode::PerGraph) {
    const auto [lo_it, hi_it] =
        std::minmax_element(raw.values.begin(), raw.values.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) {
      if (policy == DegeneratePolicy::Strict)
        throw InputError("degenerate scaling: all index values of '" +
                         raw.label + "' are equal (" + std::to_string(lo) +
                         ")");
      std::fill(out.values.begin(), out.values.end(), 0.0);
      return out;
    }
    for (std::size_t i = 0; i < k; ++i)
      out.values[i] = (raw.values[i] - lo) / (hi - lo);
    return out;
  }

  if (family == nullptr)
    throw InputError("PerFamily scaling requires family statistics");
  if (family->min_value.size() != k || family->max_value.size() != k)
    throw InputError("family statistics length does not match vector length");
  for (std::size_t i = 0; i < k; ++i) {
    const double lo = family->min_value[i], hi = family->max_value[i];
    if (hi == lo) {
      if (policy == DegeneratePolicy::Strict)
        throw InputError(
            "degenerate scaling: index '" +
            std::string(index_name(raw.ids.empty() ? IndexId::Harary
                                                   : raw.ids[i])) +
            "' is constant across the family");
      out.values[i] = 0.0;
    } else {
      out.values[i] = (raw.values[i] - lo) / (hi - lo);
    }
  }
  return out;
}

double distance_p(const ScaledVector& a, const ScaledVector& b, double p) {
  if (a.size() != b.size())
    throw InputError("p-distance requires equal-length vectors (" +
                     std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  if (!(p >= 1.0))
    throw InputError("p-distance requires p >= 1, got " + std::to_string(p));
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += std::pow(std::abs(a.values[i] - b.values[i]), p);
  return std::pow(acc, 1.0 / p);
}

double similarity_p(const Graph& g1, const Graph& g2,
                    const SimilarityConfig& cfg) {
  const IndexVector r1 = compute_vector(g1, cfg.set);
  const IndexVector r2 = compute_vector(g2, cfg.set);
  ScaledVector a, b;
  if (cfg.scaling == ScalingMode::PerGraph) {
    a = scale(r1, ScalingMode::PerGraph);
    b = scale(r2, ScalingMode::PerGraph);
  } else {
    const FamilyScaleStats stats = family_index_stats({r1, r2});
    a = scale(r1, ScalingMode::PerFamily, &stats);
    b = scale(r2, ScalingMode::PerFamily, &stats);
  }
  const double k_root = std::pow(static_cast<double>(a.size()), 1.0 / cfg.p);
  return (k_root - distance_p(a, b, cfg.p)) / k_root;
}

double similarity_from_distance(double d, double bound) {
  if (!(bound > 0.0))
    throw InputError("similarity_from_distance requires a positive bound");
  if (d < 0.0 || d > bound)
    throw InputError("distance " + std::to_string(d) +
                     " outside [0, " + std::to_string(bound) + "]");
  return (bound - d) / bound;
}

double similarity_from_unbounded_distance(double d) {
  if (d < 0.0)
    throw InputError("distance must be nonnegative");
  return 1.0 / (1.0 + d);
}

double distance_from_similarity(double s) {
  if (s < 0.0 || s > 1.0)
    throw InputError("similarity " + std::to_string(s) + " outside [0,1]");
  return 1.0 - s;
}

PairTable pair_table(const std::vector<Graph>& family,
                     const SimilarityConfig& cfg, int jobs) {
  {
    std::unordered_set<std::string> labels;
    for (const Graph& g : family) {
      if (g.label().empty())
        throw InputError("pair_table requires every graph to carry a label");
      if (!labels.insert(g.label()).second)
        throw InputError("duplicate label in family: '" + g.label() + "'");
    }
  }

  const std::size_t m = family.size();
  if (m == 0) {
    PairTable empty;
    empty.config = cfg;
    return empty;
  }
  std::vector<IndexVector> raws;
  raws.reserve(m);
  for (const Graph& g : family)
    raws.push_back(compute_vector(g, cfg.set));

  std::vector<ScaledVector> scaled(m);
  if (cfg.scaling == ScalingMode::PerGraph) {
    for (std::size_t i = 0; i < m; ++i)
      scaled[i] = scale(raws[i], ScalingMode::PerGraph);
  } else {
    const FamilyScaleStats stats = family_index_stats(raws);
    for (std::size_t i = 0; i < m; ++i)
      scaled[i] = scale(raws[i], ScalingMode::PerFamily, &stats);
  }

  const std::size_t k = scaled.empty() ? 0 : scaled.front().size();
  const double k_root = std::pow(static_cast<double>(k), 1.0 / cfg.p);
  const std::size_t total = m * (m - 1) / 2;

  PairTable table;
  table.config = cfg;
  table.rows.resize(total);

  // Pair ranks map to (i,j) with i < j in lexicographic order; each worker
  // fills disjoint rank ranges of the preallocated row vector, so output
  // is identical regardless of worker count or scheduling.
  auto fill_range = [&](std::size_t lo, std::size_t hi) {
    std::size_t rank = 0, i = 0;
    // Advance to the row containing rank `lo`.
    while (rank + (m - 1 - i) <= lo)
      rank += m - 1 - i, ++i;
    std::size_t j = i + 1 + (lo - rank);
    for (std::size_t r = lo; r < hi; ++r) {
      const double d = distance_p(scaled[i], scaled[j], cfg.p);
      table.rows[r] = PairRow{family[i].label(), family[j].label(), d,
                              (k_root - d) / k_root, std::nullopt};
      if (++j == m)
        ++i, j = i + 1;
    }
  };

  const int workers = effective_jobs(jobs, total);
  if (total == 0) {
    // nothing to fill
  } else if (workers <= 1 || total < 2) {
    fill_range(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::size_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(total, static_cast<std::size_t>(w) * chunk);
      const std::size_t hi = std::min(total, lo + chunk);
      if (lo < hi)
        pool.emplace_back(fill_range, lo, hi);
    }
    for (std::thread& t : pool)
      t.join();
  }

  std::sort(table.rows.begin(), table.rows.end(),
            [](const PairRow& x, const PairRow& y) {
              if (x.similarity != y.similarity)
                return x.similarity < y.similarity;
              if (x.label_a != y.label_a)
                return x.label_a < y.label_a;
              return x.label_b < y.label_b;
            });
  return table;
}

PairTable rescale_similarities(PairTable table) {
  if (table.rows.size() < 2)
    throw InputError("rescaling requires at least two pairs");
  double lo = table.rows.front().similarity, hi = lo;
  for (const PairRow& row : table.rows) {
    lo = std::min(lo, row.similarity);
    hi = std::max(hi, row.similarity);
  }
  if (hi == lo)
    throw InputError("degenerate rescale: all similarities are equal");
  for (PairRow& row : table.rows)
    row.rescaled = (row.similarity - lo) / (hi - lo);
  return table;
}

} // namespace graphsim
