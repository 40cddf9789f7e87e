// Self-contained SVG line charts of equal-acceleration sweeps: one panel per
// (measure, region), one curve per family. GHZ is drawn solid, GHZ-like
// dashed and W dotted.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rindler/sweep.hpp"

namespace rindler {

struct ChartFrame {
  double left = 0, top = 0, width = 0, height = 0;  // plot area in px
};

struct Chart {
  Measure measure = Measure::FIDELITY;
  RindlerRegion region = RindlerRegion::I;
  double x_min = 0, x_max = 1;
  double y_min = 0, y_max = 1;
  double y_step = 0.2;
  ChartFrame frame;

  double px_x(double r) const;
  double px_y(double value) const;
};

/// Plotted value of a record for a measure: fidelity, capacity_avg or neg_mean.
std::optional<double> plotted_value(const MeasureRecord& rec, Measure measure);

/// Panel layout for the measures and regions present in `records`.
/// Throws std::invalid_argument for empty input or unequal r_a, r_b, r_c.
std::vector<Chart> plan_charts(std::span<const MeasureRecord> records);

std::string render_svg(std::span<const MeasureRecord> records);

/// render_svg to a file; throws OutputError when the path is unwritable.
void emit_plot(std::span<const MeasureRecord> records, const std::string& path);

/// Polyline id, e.g. "negativity-I-GHZ".
std::string curve_id(Measure measure, RindlerRegion region, StateFamily family);

/// Coordinate text as written into polyline points.
std::string format_px(double px);

}  // namespace rindler
