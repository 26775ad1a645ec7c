#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1score/comparator.hpp"

namespace a1 {

/// One row of a catalog file: `name,time,space`.
struct CatalogEntry {
  std::string name;
  std::string time;
  std::string space;
};

class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::size_t line, const std::string& detail);
  /// 1-based line number, 0 for whole-file problems.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads a UTF-8 CSV catalog with header `name,time,space`. Blank lines and
/// lines starting with '#' are skipped. Every expression must parse and
/// names must be unique; violations throw CatalogError naming the line.
std::vector<AlgorithmProfile> read_catalog(std::istream& in);

struct RankResult {
  std::vector<std::string> names;                // sorted
  std::vector<std::vector<Winner>> matrix;       // matrix[i][j]: verdict of names[i] (X) vs names[j] (Y)
  std::vector<int> wins;                         // per name
  std::vector<int> ties;                         // indistinguishable outcomes per name
  std::vector<std::size_t> order;                // indices by wins desc, then name
  std::size_t oracle_disagreements = 0;          // over unordered pairs
};

/// Round-robin pairwise verdicts at n_star over every unordered pair.
/// Not guaranteed transitive. Needs at least two profiles.
RankResult rank(std::vector<AlgorithmProfile> profiles, double n_star, const A1Config& config,
                const ScanRange& scan);

}  // namespace a1
