#include "a1score/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace a1 {

namespace {

std::string g(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string crossover_list(const ScanReport& scan) {
  if (scan.crossovers.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < scan.crossovers.size(); ++i) {
    if (i > 0) out += ";";
    out += g(scan.crossovers[i].lo, 12) + ":" + g(scan.crossovers[i].hi, 12);
  }
  return out;
}

std::string side_name(Winner w, const ComparisonReport& r) {
  switch (w) {
    case Winner::X: return "X (" + r.x.name + ")";
    case Winner::Y: return "Y (" + r.y.name + ")";
    case Winner::Indistinguishable: return "indistinguishable";
  }
  return "?";
}

}  // namespace

std::string format_text(const ComparisonReport& r) {
  const auto& v = r.verdict;
  std::ostringstream os;
  os << "A1-Score comparison at n = " << g(v.n_star, 12) << " (xi = " << g(r.config.xi, 12)
     << ", log base " << g(r.config.eval.log_base, 12) << ")\n\n";
  auto line = [&](const char* tag, const AlgorithmProfile& p, double a1) {
    os << "  " << tag << " (" << p.name << ")\n"
       << "      time  = " << to_text(p.time) << "\n"
       << "      space = " << to_text(p.space) << "\n"
       << "      time*space = " << to_text(canonical_product(p)) << "\n"
       << "      A1 = " << g(a1, 10) << "\n";
  };
  line("X", r.x, v.a1_x);
  line("Y", r.y, v.a1_y);
  os << "\n";
  if (v.branch == Branch::EqualProduct) {
    os << "time*space products are symbolically equal -> equal-product branch: the LOWER A1-Score wins\n";
  } else {
    os << "time*space products differ -> unequal-product branch: the HIGHER A1-Score wins\n";
  }
  os << "winner: " << side_name(v.winner, r) << "\n";

  os << "crossovers over [" << g(r.scan.lo, 12) << ", " << g(r.scan.hi, 12) << "] (" << r.scan.samples
     << " geometric samples): ";
  if (v.scan.crossovers.empty()) {
    os << "none, the A1 ordering is stable across the scan\n";
  } else {
    os << v.scan.crossovers.size() << " interval(s) where the ordering flips: " << crossover_list(v.scan) << "\n";
  }
  if (!v.scan.gaps.empty()) os << "  (" << v.scan.gaps.size() << " samples overflowed and were skipped)\n";

  os << "oracle (smaller product, then smaller sum, by growth order): " << side_name(v.oracle_winner, r) << "\n";
  if (v.oracle_agrees) {
    os << "oracle agrees with the A1 verdict\n";
  } else {
    os << "DISAGREEMENT: the A1 verdict picks " << side_name(v.winner, r) << " but the product/sum oracle picks "
       << side_name(v.oracle_winner, r) << "\n";
  }
  return os.str();
}

std::string format_kv(const ComparisonReport& r) {
  const auto& v = r.verdict;
  std::ostringstream os;
  os << "x_name=" << r.x.name << "\n"
     << "y_name=" << r.y.name << "\n"
     << "n=" << g(v.n_star) << "\n"
     << "xi=" << g(r.config.xi) << "\n"
     << "log_base=" << g(r.config.eval.log_base) << "\n"
     << "winner=" << to_string(v.winner) << "\n"
     << "branch=" << to_string(v.branch) << "\n"
     << "a1_x=" << g(v.a1_x) << "\n"
     << "a1_y=" << g(v.a1_y) << "\n"
     << "product_x=" << to_text(canonical_product(r.x)) << "\n"
     << "product_y=" << to_text(canonical_product(r.y)) << "\n"
     << "product_equal=" << to_string(v.product_equality) << "\n"
     << "oracle_winner=" << to_string(v.oracle_winner) << "\n"
     << "oracle_agrees=" << (v.oracle_agrees ? "true" : "false") << "\n"
     << "crossovers=" << crossover_list(v.scan) << "\n"
     << "scan_gaps=" << v.scan.gaps.size() << "\n";
  return os.str();
}

std::string format_rank(const RankResult& r, double n_star) {
  std::ostringstream os;
  os << "A1-Score ranking at n = " << g(n_star, 12) << " (pairwise, not guaranteed transitive)\n\n";

  std::size_t width = 4;
  for (const auto& n : r.names) width = std::max(width, n.size());
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };

  os << "winner matrix (row vs column):\n" << pad("");
  for (const auto& n : r.names) os << pad(n);
  os << "\n";
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    os << pad(r.names[i]);
    for (std::size_t j = 0; j < r.names.size(); ++j) {
      std::string cell;
      if (i == j) {
        cell = "-";
      } else if (r.matrix[i][j] == Winner::X) {
        cell = r.names[i];
      } else if (r.matrix[i][j] == Winner::Y) {
        cell = r.names[j];
      } else {
        cell = "tie";
      }
      os << pad(cell);
    }
    os << "\n";
  }

  os << "\nwin counts:\n";
  for (std::size_t idx : r.order) {
    os << "  " << pad(r.names[idx]) << r.wins[idx] << " win(s), " << r.ties[idx] << " tie(s)\n";
  }
  if (r.oracle_disagreements > 0) {
    os << "\n" << r.oracle_disagreements << " pair(s) where the A1 verdict disagrees with the product/sum oracle\n";
  }
  return os.str();
}

}  // namespace a1
