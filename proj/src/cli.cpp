#include "a1score/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "a1score/catalog.hpp"
#include "a1score/plot.hpp"
#include "a1score/report.hpp"

namespace a1 {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double n = 3.0;
  double xi = 1.0;
  double log_base = 2.0;
  std::string scan = "2:1000:512";
  std::string format = "text";
  std::string out;
  std::string emit = "both";
  std::string x_time, x_space, y_time, y_space;
  std::string x_name = "X", y_name = "Y";
  std::string catalog;
};

void add_shared(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "decision point n* (> 1)")->capture_default_str();
  cmd->add_option("--xi", o.xi, "scaling factor (> 0)")->capture_default_str();
  cmd->add_option("--log-base", o.log_base, "logarithm base (> 1)")->capture_default_str();
  cmd->add_option("--scan", o.scan, "scan range lo:hi:samples (geometric)")->capture_default_str();
}

void add_profiles(CLI::App* cmd, Options& o) {
  cmd->add_option("--x-time", o.x_time, "time complexity of X")->required();
  cmd->add_option("--x-space", o.x_space, "space complexity of X")->required();
  cmd->add_option("--y-time", o.y_time, "time complexity of Y")->required();
  cmd->add_option("--y-space", o.y_space, "space complexity of Y")->required();
  cmd->add_option("--x-name", o.x_name, "label for X")->capture_default_str();
  cmd->add_option("--y-name", o.y_name, "label for Y")->capture_default_str();
}

ComplexityExpr parse_flag(const std::string& flag, const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(flag + " \"" + text + "\": " + e.what());
  }
}

A1Config config_from(const Options& o) {
  if (!(o.n > 1.0)) throw InputError("--n: n must be greater than 1, got " + std::to_string(o.n));
  A1Config c{o.xi, EvalConfig{o.log_base}};
  if (!(o.xi > 0.0)) throw InputError("--xi: scaling factor must be greater than 0");
  if (!(o.log_base > 1.0)) throw InputError("--log-base: logarithm base must be greater than 1");
  return c;
}

ScanRange scan_from(const Options& o) {
  try {
    ScanRange r = parse_scan_range(o.scan);
    validate(r);
    return r;
  } catch (const std::exception& e) {
    throw InputError(std::string("--scan: ") + e.what());
  }
}

std::pair<AlgorithmProfile, AlgorithmProfile> profiles_from(const Options& o) {
  AlgorithmProfile x{o.x_name, parse_flag("--x-time", o.x_time), parse_flag("--x-space", o.x_space)};
  AlgorithmProfile y{o.y_name, parse_flag("--y-time", o.y_time), parse_flag("--y-space", o.y_space)};
  return {std::move(x), std::move(y)};
}

int run_compare(const Options& o, std::ostream& out) {
  A1Config config = config_from(o);
  ScanRange scan = scan_from(o);
  auto [x, y] = profiles_from(o);
  ComparisonVerdict v;
  try {
    v = compare(x, y, o.n, config, scan);
  } catch (const OverflowError& e) {
    throw InputError(std::string("--n: ") + e.what());
  }
  ComparisonReport report{x, y, config, scan, v};
  out << (o.format == "kv" ? format_kv(report) : format_text(report));
  return kExitOk;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

int run_plot(const Options& o, std::ostream& out, std::ostream& err) {
  A1Config config = config_from(o);
  ScanRange scan = scan_from(o);
  auto [x, y] = profiles_from(o);
  PlotData data = sample_pair(x, y, config, scan);
  if (data.omitted > 0) {
    err << "warning: " << data.omitted << " sample(s) omitted because an A1-Score overflowed\n";
  }

  std::filesystem::path path(o.out);
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  if (o.emit == "both") {
    auto stem = path;
    if (stem.extension() == ".csv" || stem.extension() == ".svg") stem.replace_extension();
    files.emplace_back(std::filesystem::path(stem).concat(".csv"), render_csv(data));
    files.emplace_back(std::filesystem::path(stem).concat(".svg"), render_svg(data));
  } else {
    files.emplace_back(path, o.emit == "csv" ? render_csv(data) : render_svg(data));
  }
  for (const auto& [p, content] : files) {
    write_file(p, content);
    out << "wrote " << p.string() << " (" << data.x.points.size() << " samples)\n";
  }
  return kExitOk;
}

int run_rank(const Options& o, std::ostream& out) {
  A1Config config = config_from(o);
  ScanRange scan = scan_from(o);
  std::ifstream f(o.catalog);
  if (!f) throw IoError("cannot open catalog " + o.catalog);
  std::vector<AlgorithmProfile> profiles;
  try {
    profiles = read_catalog(f);
  } catch (const CatalogError& e) {
    throw InputError(o.catalog + ": " + e.what());
  }
  if (profiles.size() < 2) throw InputError(o.catalog + ": need at least 2 algorithms, got " + std::to_string(profiles.size()));
  try {
    out << format_rank(rank(std::move(profiles), o.n, config, scan), o.n);
  } catch (const OverflowError& e) {
    throw InputError(std::string("--n: ") + e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compare algorithms by combined time and space complexity using the A1-Score", "a1score"};
  app.require_subcommand(1);
  Options o;

  auto* compare_cmd = app.add_subcommand("compare", "verdict for a pair of algorithms");
  add_shared(compare_cmd, o);
  add_profiles(compare_cmd, o);
  compare_cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "kv"}))->capture_default_str();

  auto* plot_cmd = app.add_subcommand("plot", "write A1-Score curves as CSV and/or SVG");
  add_shared(plot_cmd, o);
  add_profiles(plot_cmd, o);
  plot_cmd->add_option("--out", o.out, "output path (extension replaced when emitting both)")->required();
  plot_cmd->add_option("--emit", o.emit, "what to write")->check(CLI::IsMember({"csv", "svg", "both"}))->capture_default_str();

  auto* rank_cmd = app.add_subcommand("rank", "round-robin pairwise ranking of a catalog");
  add_shared(rank_cmd, o);
  rank_cmd->add_option("catalog", o.catalog, "CSV catalog with header name,time,space")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (compare_cmd->parsed()) return run_compare(o, out);
    if (plot_cmd->parsed()) return run_plot(o, out, err);
    return run_rank(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace a1
