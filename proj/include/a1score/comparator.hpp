#pragma once

#include <string_view>
#include <vector>

#include "a1score/metric.hpp"

namespace a1 {

enum class Winner { X, Y, Indistinguishable };
enum class Branch { UnequalProduct, EqualProduct };
enum class ProductEquality { Symbolic, Unequal };

std::string_view to_string(Winner w);
std::string_view to_string(Branch b);
std::string_view to_string(ProductEquality p);

/// Geometrically spaced sample grid lo, ..., hi (both endpoints included).
struct ScanRange {
  double lo = 2.0;
  double hi = 1000.0;
  int samples = 512;
};

void validate(const ScanRange& scan);
std::vector<double> sample_points(const ScanRange& scan);

/// Parses "lo:hi:samples"; throws std::invalid_argument.
ScanRange parse_scan_range(std::string_view text);

/// Closed interval of sample points [lo, hi].
struct Interval {
  double lo;
  double hi;
};

struct ScanReport {
  std::vector<Interval> crossovers;
  std::vector<double> gaps;  // sample points where either score overflowed
};

struct ComparisonVerdict {
  Winner winner;
  Branch branch;
  double n_star;
  double a1_x;
  double a1_y;
  ProductEquality product_equality;
  ScanReport scan;
  Winner oracle_winner;
  bool oracle_agrees;
};

/// Relative tolerance below which two A1-Scores count as tied.
inline constexpr double kTieTolerance = 1e-12;

/// -1, 0 or +1 for a < b, a ~= b (within kTieTolerance relative), a > b.
int tolerant_sign(double a, double b);

/// The hypothesis rule: with unequal products the higher score wins, with
/// symbolically equal products the lower score wins.
Winner decide_winner(Branch branch, double a1_x, double a1_y);

/// Symbolic verdict: smaller product by growth order wins; on a tie the
/// smaller sum wins; otherwise indistinguishable. Independent of n, xi and
/// the logarithm base.
Winner oracle_verdict(const AlgorithmProfile& x, const AlgorithmProfile& y);

/// Maximal runs of samples where sign(a1_x - a1_y) differs from the sign at
/// the first evaluable sample. Samples that overflow are reported as gaps.
ScanReport scan_crossovers(const AlgorithmProfile& x, const AlgorithmProfile& y, const A1Config& config,
                           const ScanRange& scan);

/// Full pairwise verdict at n_star. Throws DomainError / OverflowError when
/// either score cannot be evaluated at n_star.
ComparisonVerdict compare(const AlgorithmProfile& x, const AlgorithmProfile& y, double n_star,
                          const A1Config& config = {}, const ScanRange& scan = {});

}  // namespace a1
