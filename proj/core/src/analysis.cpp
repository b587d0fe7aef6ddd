#include "graphsim/analysis.hpp"

#include <cmath>

#include "graphsim/errors.hpp"

namespace graphsim {

CorrelationReport pearson(std::span<const double> xs,
                          std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InputError("series length mismatch: " + std::to_string(xs.size()) +
                     " vs " + std::to_string(ys.size()));
  }
  const std::size_t n = xs.size();
  if (n < 3) {
    throw InputError("correlation needs at least 3 points, got " +
                     std::to_string(n));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw InputError("correlation undefined for a constant series");
  }
  CorrelationReport report;
  report.r = sxy / std::sqrt(sxx * syy);
  report.n_points = static_cast<int>(n);
  return report;
}

ExtremaReport extrema_pairs(const PairTable& table) {
  if (table.rows.empty()) {
    throw InputError("extrema of an empty pair table");
  }
  ExtremaReport report;
  report.min_value = table.rows.front().similarity;
  report.max_value = table.rows.front().similarity;
  for (const PairRow& row : table.rows) {
    if (row.similarity < report.min_value) report.min_value = row.similarity;
    if (row.similarity > report.max_value) report.max_value = row.similarity;
  }
  for (const PairRow& row : table.rows) {
    if (std::abs(row.similarity - report.min_value) <= 1e-12) {
      report.min_pairs.emplace_back(row.label_a, row.label_b);
    }
    if (std::abs(row.similarity - report.max_value) <= 1e-12) {
      report.max_pairs.emplace_back(row.label_a, row.label_b);
    }
  }
  report.min_unique = report.min_pairs.size() == 1;
  report.max_unique = report.max_pairs.size() == 1;
  return report;
}

} // namespace graphsim
