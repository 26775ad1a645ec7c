#include "a1score/comparator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace a1 {

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::X: return "X";
    case Winner::Y: return "Y";
    case Winner::Indistinguishable: return "indistinguishable";
  }
  return "?";
}

std::string_view to_string(Branch b) { return b == Branch::EqualProduct ? "equal-product" : "unequal-product"; }

std::string_view to_string(ProductEquality p) { return p == ProductEquality::Symbolic ? "symbolic" : "unequal"; }

void validate(const ScanRange& scan) {
  if (!(scan.lo > 1.0) || !std::isfinite(scan.lo)) throw DomainError("scan lower bound must be greater than 1");
  if (!(scan.hi > scan.lo) || !std::isfinite(scan.hi)) throw DomainError("scan upper bound must exceed lower bound");
  if (scan.samples < 2) throw DomainError("scan needs at least 2 samples");
}

std::vector<double> sample_points(const ScanRange& scan) {
  validate(scan);
  std::vector<double> pts(static_cast<std::size_t>(scan.samples));
  double ratio = std::log(scan.hi / scan.lo);
  for (int i = 0; i < scan.samples; ++i) {
    pts[static_cast<std::size_t>(i)] = scan.lo * std::exp(ratio * i / (scan.samples - 1));
  }
  pts.front() = scan.lo;
  pts.back() = scan.hi;
  return pts;
}

ScanRange parse_scan_range(std::string_view text) {
  std::string s(text);
  auto first = s.find(':');
  auto second = first == std::string::npos ? std::string::npos : s.find(':', first + 1);
  if (second == std::string::npos || s.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("scan range must look like lo:hi:samples, got '" + s + "'");
  }
  try {
    std::size_t used = 0;
    ScanRange r;
    std::string lo = s.substr(0, first), hi = s.substr(first + 1, second - first - 1), n = s.substr(second + 1);
    r.lo = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    r.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    r.samples = std::stoi(n, &used);
    if (used != n.size()) throw std::invalid_argument(n);
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("scan range must look like lo:hi:samples, got '" + s + "'");
  }
}

int tolerant_sign(double a, double b) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  if (std::fabs(a - b) <= kTieTolerance * scale) return 0;
  return a < b ? -1 : 1;
}

Winner decide_winner(Branch branch, double a1_x, double a1_y) {
  int s = tolerant_sign(a1_x, a1_y);
  if (s == 0) return Winner::Indistinguishable;
  bool x_higher = s > 0;
  if (branch == Branch::EqualProduct) return x_higher ? Winner::Y : Winner::X;
  return x_higher ? Winner::X : Winner::Y;
}

Winner oracle_verdict(const AlgorithmProfile& x, const AlgorithmProfile& y) {
  auto by_product = growth_order(canonical_product(x), canonical_product(y));
  if (by_product < 0) return Winner::X;
  if (by_product > 0) return Winner::Y;
  auto by_sum = growth_order(canonical_sum(x), canonical_sum(y));
  if (by_sum < 0) return Winner::X;
  if (by_sum > 0) return Winner::Y;
  return Winner::Indistinguishable;
}

ScanReport scan_crossovers(const AlgorithmProfile& x, const AlgorithmProfile& y, const A1Config& config,
                           const ScanRange& scan) {
  ScanReport report;
  std::optional<int> reference;
  std::optional<Interval> run;
  for (double n : sample_points(scan)) {
    int sign;
    try {
      sign = tolerant_sign(a1_score(x, n, config), a1_score(y, n, config));
    } catch (const OverflowError&) {
      report.gaps.push_back(n);
      continue;
    }
    if (!reference) {
      reference = sign;
      continue;
    }
    if (sign != *reference) {
      if (run) {
        run->hi = n;
      } else {
        run = Interval{n, n};
      }
    } else if (run) {
      report.crossovers.push_back(*run);
      run.reset();
    }
  }
  if (run) report.crossovers.push_back(*run);
  return report;
}

ComparisonVerdict compare(const AlgorithmProfile& x, const AlgorithmProfile& y, double n_star, const A1Config& config,
                          const ScanRange& scan) {
  validate(config);
  validate(scan);
  ComparisonVerdict v{};
  v.n_star = n_star;
  v.product_equality = canonical_equal(canonical_product(x), canonical_product(y)) ? ProductEquality::Symbolic
                                                                                    : ProductEquality::Unequal;
  v.branch = v.product_equality == ProductEquality::Symbolic ? Branch::EqualProduct : Branch::UnequalProduct;
  v.a1_x = a1_score(x, n_star, config);
  v.a1_y = a1_score(y, n_star, config);
  v.winner = decide_winner(v.branch, v.a1_x, v.a1_y);
  v.scan = scan_crossovers(x, y, config, scan);
  v.oracle_winner = oracle_verdict(x, y);
  v.oracle_agrees = v.winner == v.oracle_winner;
  return v;
}

}  // namespace a1
