#pragma once

#include <string>
#include <utility>
#include <vector>

#include "a1score/comparator.hpp"

namespace a1 {

struct PlotPoint {
  double n;
  double a1;
};

/// Sampled A1-Score curve of one algorithm: n strictly increasing and > 1,
/// every a1 finite and positive.
struct PlotSeries {
  std::string label;
  std::vector<PlotPoint> points;
};

struct PlotData {
  PlotSeries x;
  PlotSeries y;
  std::size_t omitted = 0;  // samples dropped because a score overflowed
};

/// Samples both curves on the same grid, keeping only n where both scores
/// are representable.
PlotData sample_pair(const AlgorithmProfile& x, const AlgorithmProfile& y, const A1Config& config,
                     const ScanRange& scan);

/// Header `n,a1_x,a1_y` then one row per sample, 12 significant digits.
std::string render_csv(const PlotData& data);

/// Inverse of render_csv (used for round-trip checks). Throws
/// std::invalid_argument on malformed input.
std::vector<std::vector<double>> read_csv_rows(const std::string& csv);

/// Self-contained SVG line chart: linear axes with tick labels, one
/// polyline per algorithm and a legend.
std::string render_svg(const PlotData& data);

}  // namespace a1
