#include "a1score/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace a1 {

namespace {

std::string num(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, roughly range/target.
double nice_step(double range, int target) {
  double raw = range / target;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double norm = raw / mag;
  double step = norm < 1.5 ? 1.0 : norm < 3.0 ? 2.0 : norm < 7.0 ? 5.0 : 10.0;
  return step * mag;
}

struct Axis {
  double lo;
  double hi;
  double step;
};

Axis nice_axis(double lo, double hi, int target) {
  if (hi <= lo) {
    double pad = lo == 0.0 ? 1.0 : std::fabs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  double step = nice_step(hi - lo, target);
  return Axis{std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 20, kTop = 40, kBottom = 60;
constexpr const char* kColors[] = {"#1f77b4", "#d62728"};

}  // namespace

PlotData sample_pair(const AlgorithmProfile& x, const AlgorithmProfile& y, const A1Config& config,
                     const ScanRange& scan) {
  PlotData data;
  data.x.label = x.name;
  data.y.label = y.name;
  for (double n : sample_points(scan)) {
    try {
      double ax = a1_score(x, n, config);
      double ay = a1_score(y, n, config);
      data.x.points.push_back({n, ax});
      data.y.points.push_back({n, ay});
    } catch (const OverflowError&) {
      ++data.omitted;
    }
  }
  return data;
}

std::string render_csv(const PlotData& data) {
  if (data.x.points.size() != data.y.points.size()) throw std::invalid_argument("series lengths differ");
  std::string out = "n,a1_x,a1_y\n";
  for (std::size_t i = 0; i < data.x.points.size(); ++i) {
    out += num("%.12g", data.x.points[i].n) + "," + num("%.12g", data.x.points[i].a1) + "," +
           num("%.12g", data.y.points[i].a1) + "\n";
  }
  return out;
}

std::vector<std::vector<double>> read_csv_rows(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "n,a1_x,a1_y") throw std::invalid_argument("missing CSV header");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t used = 0;
      row.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument("malformed CSV field '" + field + "'");
    }
    if (row.size() != 3) throw std::invalid_argument("CSV row needs 3 fields: " + line);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_svg(const PlotData& data) {
  const PlotSeries* series[] = {&data.x, &data.y};

  double nmin = INFINITY, nmax = -INFINITY, amin = INFINITY, amax = -INFINITY;
  for (const auto* s : series) {
    for (const auto& p : s->points) {
      nmin = std::min(nmin, p.n);
      nmax = std::max(nmax, p.n);
      amin = std::min(amin, p.a1);
      amax = std::max(amax, p.a1);
    }
  }
  if (!std::isfinite(nmin)) {
    nmin = 1.0, nmax = 2.0, amin = 0.0, amax = 1.0;
  }
  Axis xa = nice_axis(nmin, nmax, 8);
  Axis ya = nice_axis(std::min(0.0, amin), amax, 6);

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double n) { return kLeft + (n - xa.lo) / (xa.hi - xa.lo) * pw; };
  auto sy = [&](double a) { return kTop + ph - (a - ya.lo) / (ya.hi - ya.lo) * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">A1-Score vs n</text>\n";

  // axes and ticks
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
     << "\"/>\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph << "\"/>\n"
     << "</g>\n<g>\n";
  for (double t = xa.lo; t <= xa.hi + xa.step * 1e-9; t += xa.step) {
    double px = sx(t);
    os << "<line x1=\"" << num("%.2f", px) << "\" y1=\"" << kTop + ph << "\" x2=\"" << num("%.2f", px)
       << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << num("%.2f", px) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">"
       << num("%g", t) << "</text>\n";
  }
  for (double t = ya.lo; t <= ya.hi + ya.step * 1e-9; t += ya.step) {
    double py = sy(t);
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num("%.2f", py) << "\" x2=\"" << kLeft << "\" y2=\""
       << num("%.2f", py) << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << num("%.2f", py) << "\" x2=\"" << kLeft + pw << "\" y2=\""
       << num("%.2f", py) << "\" stroke=\"#e0e0e0\"/>\n"
       << "<text x=\"" << kLeft - 8 << "\" y=\"" << num("%.2f", py + 4) << "\" text-anchor=\"end\">"
       << num("%g", std::fabs(t) < ya.step * 1e-9 ? 0.0 : t) << "</text>\n";
  }
  os << "</g>\n"
     << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">n</text>\n"
     << "<text x=\"20\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << kTop + ph / 2 << ")\">A1-Score</text>\n";

  for (std::size_t i = 0; i < 2; ++i) {
    os << "<polyline fill=\"none\" stroke=\"" << kColors[i] << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& p : series[i]->points) {
      if (!first) os << ' ';
      first = false;
      os << num("%.2f", sx(p.n)) << ',' << num("%.2f", sy(p.a1));
    }
    os << "\"/>\n";
  }

  // legend
  double lx = kLeft + pw - 170, ly = kTop + 10;
  os << "<g>\n<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"160\" height=\"46\" fill=\"white\" stroke=\"#888\"/>\n";
  for (std::size_t i = 0; i < 2; ++i) {
    double y = ly + 16 + 18 * static_cast<double>(i);
    os << "<line x1=\"" << lx + 8 << "\" y1=\"" << y << "\" x2=\"" << lx + 32 << "\" y2=\"" << y << "\" stroke=\""
       << kColors[i] << "\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << lx + 40 << "\" y=\"" << y + 4 << "\">" << xml_escape(series[i]->label) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace a1
