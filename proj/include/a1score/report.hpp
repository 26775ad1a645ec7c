#pragma once

#include <string>

#include "a1score/catalog.hpp"
#include "a1score/comparator.hpp"

namespace a1 {

/// Everything a compare report prints: the inputs plus the verdict.
struct ComparisonReport {
  const AlgorithmProfile& x;
  const AlgorithmProfile& y;
  const A1Config& config;
  const ScanRange& scan;
  const ComparisonVerdict& verdict;
};

std::string format_text(const ComparisonReport& report);

/// One `key=value` per line. Keys: x_name, y_name, n, xi, log_base,
/// winner, branch, a1_x, a1_y, product_x, product_y, product_equal,
/// oracle_winner, oracle_agrees, crossovers, scan_gaps.
std::string format_kv(const ComparisonReport& report);

std::string format_rank(const RankResult& result, double n_star);

}  // namespace a1
