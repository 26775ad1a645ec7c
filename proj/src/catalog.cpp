#include "a1score/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace a1 {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CatalogError::CatalogError(std::size_t line, const std::string& detail)
    : std::runtime_error(line == 0 ? detail : "line " + std::to_string(line) + ": " + detail), line_(line) {}

std::vector<AlgorithmProfile> read_catalog(std::istream& in) {
  std::vector<AlgorithmProfile> out;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto fields = split(t);
    if (!header) {
      if (fields != std::vector<std::string>{"name", "time", "space"}) {
        throw CatalogError(lineno, "expected header 'name,time,space'");
      }
      header = true;
      continue;
    }
    if (fields.size() != 3) throw CatalogError(lineno, "expected 3 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) throw CatalogError(lineno, "empty algorithm name");
    if (!seen.insert(fields[0]).second) throw CatalogError(lineno, "duplicate name '" + fields[0] + "'");
    try {
      out.push_back(make_profile(fields[0], fields[1], fields[2]));
    } catch (const ParseError& e) {
      throw CatalogError(lineno, e.what());
    }
  }
  if (!header) throw CatalogError(0, "catalog is empty");
  return out;
}

RankResult rank(std::vector<AlgorithmProfile> profiles, double n_star, const A1Config& config,
                const ScanRange& scan) {
  if (profiles.size() < 2) throw std::invalid_argument("need at least 2 algorithms to rank");
  std::sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) { return a.name < b.name; });

  const std::size_t k = profiles.size();
  RankResult r;
  r.matrix.assign(k, std::vector<Winner>(k, Winner::Indistinguishable));
  r.wins.assign(k, 0);
  r.ties.assign(k, 0);
  for (const auto& p : profiles) r.names.push_back(p.name);

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      ComparisonVerdict v = compare(profiles[i], profiles[j], n_star, config, scan);
      r.matrix[i][j] = v.winner;
      r.matrix[j][i] = v.winner == Winner::X ? Winner::Y : v.winner == Winner::Y ? Winner::X : v.winner;
      if (v.winner == Winner::X) {
        ++r.wins[i];
      } else if (v.winner == Winner::Y) {
        ++r.wins[j];
      } else {
        ++r.ties[i];
        ++r.ties[j];
      }
      if (!v.oracle_agrees) ++r.oracle_disagreements;
    }
  }
  r.order.resize(k);
  std::iota(r.order.begin(), r.order.end(), 0);
  std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) { return r.wins[a] > r.wins[b]; });
  return r;
}

}  // namespace a1
