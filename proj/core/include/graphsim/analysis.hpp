#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphsim/similarity.hpp"

namespace graphsim {

struct CorrelationReport {
  double r = 0.0;
  int n_points = 0;
  std::string series_a; // what xs were (free-form config description)
  std::string series_b; // what ys were
};

/// Sample Pearson correlation. Series must have equal length >= 3 and
/// neither may be constant (the coefficient is undefined there;
/// InputError instead of NaN).
CorrelationReport pearson(std::span<const double> xs,
                          std::span<const double> ys);

struct ExtremaReport {
  double min_value = 0.0;
  std::vector<std::pair<std::string, std::string>> min_pairs;
  bool min_unique = false;
  double max_value = 0.0;
  std::vector<std::pair<std::string, std::string>> max_pairs;
  bool max_unique = false;
};

/// Global similarity extrema of a non-empty table with every attaining
/// pair (ties within 1e-12 of the extremum count as attaining).
ExtremaReport extrema_pairs(const PairTable& table);

} // namespace graphsim
