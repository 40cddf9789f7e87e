#include "rindler/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rindler/output.hpp"

namespace rindler {

namespace {

constexpr double kPanelWidth = 440;
constexpr double kPanelHeight = 320;
constexpr double kMarginLeft = 64;
constexpr double kMarginRight = 110;
constexpr double kMarginTop = 40;
constexpr double kMarginBottom = 52;

// Curve draw order follows the legend: GHZ, GHZ-like, W.
constexpr StateFamily kCurveOrder[] = {StateFamily::GHZ, StateFamily::GHZ_LIKE, StateFamily::W};

const char* measure_slug(Measure m) {
  switch (m) {
    case Measure::FIDELITY: return "fidelity";
    case Measure::CAPACITY: return "capacity";
    case Measure::NEGATIVITY: return "negativity";
  }
  return "?";
}

const char* measure_title(Measure m) {
  switch (m) {
    case Measure::FIDELITY: return "Fidelity";
    case Measure::CAPACITY: return "Average capacity";
    case Measure::NEGATIVITY: return "Negativity";
  }
  return "?";
}

const char* axis_label(Measure m) {
  switch (m) {
    case Measure::FIDELITY: return "F";
    case Measure::CAPACITY: return "mean C_p (bits)";
    case Measure::NEGATIVITY: return "N (mean)";
  }
  return "?";
}

const char* dash_style(StateFamily f) {
  switch (f) {
    case StateFamily::GHZ: return "";
    case StateFamily::GHZ_LIKE: return " stroke-dasharray=\"9,5\"";
    case StateFamily::W: return " stroke-dasharray=\"2,4\"";
  }
  return "";
}

const char* colour(StateFamily f) {
  switch (f) {
    case StateFamily::GHZ: return "#1f3b73";
    case StateFamily::GHZ_LIKE: return "#b2182b";
    case StateFamily::W: return "#1b7837";
  }
  return "#000000";
}

std::string num(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_of("123456789") == std::string::npos) s.erase(0, 1);
  return s;
}

double nice_step(double span) {
  const double raw = span / 5.0;
  const double base = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
    if (m * base >= raw) return m * base;
  return 10.0 * base;
}

int tick_decimals(double step) {
  for (int k = 0; k < 10; ++k) {
    const double scaled = step * std::pow(10.0, k);
    if (std::abs(scaled - std::round(scaled)) < 1e-9 * scaled) return k;
  }
  return 10;
}

}  // namespace

double Chart::px_x(double r) const {
  return frame.left + (r - x_min) / (x_max - x_min) * frame.width;
}

double Chart::px_y(double value) const {
  return frame.top + (y_max - value) / (y_max - y_min) * frame.height;
}

std::optional<double> plotted_value(const MeasureRecord& rec, Measure measure) {
  switch (measure) {
    case Measure::FIDELITY: return rec.fidelity;
    case Measure::CAPACITY: return rec.capacity_avg;
    case Measure::NEGATIVITY: return rec.neg_mean;
  }
  return std::nullopt;
}

std::string curve_id(Measure measure, RindlerRegion region, StateFamily family) {
  std::string fam = family == StateFamily::GHZ_LIKE ? "GHZ-like" : std::string(to_string(family));
  return std::string(measure_slug(measure)) + "-" + std::string(to_string(region)) + "-" + fam;
}

std::string format_px(double px) { return num(px, 2); }

std::vector<Chart> plan_charts(std::span<const MeasureRecord> records) {
  if (records.empty()) throw std::invalid_argument("plot: no records to plot");
  double x_lo = records.front().r_a;
  double x_hi = x_lo;
  for (const auto& rec : records) {
    if (rec.r_a != rec.r_b || rec.r_b != rec.r_c) {
      std::ostringstream msg;
      msg << "plot: curves need equal accelerations (equal mode); found r = (" << rec.r_a << ", "
          << rec.r_b << ", " << rec.r_c << "), which looks like a grid-mode sweep";
      throw std::invalid_argument(msg.str());
    }
    x_lo = std::min(x_lo, rec.r_a);
    x_hi = std::max(x_hi, rec.r_a);
  }
  if (x_hi - x_lo < 1e-12) {
    x_lo = std::max(0.0, x_lo - 0.05);
    x_hi = x_hi + 0.05;
  }

  std::vector<Measure> measures;
  for (Measure m : {Measure::FIDELITY, Measure::CAPACITY, Measure::NEGATIVITY})
    if (std::any_of(records.begin(), records.end(), [&](const auto& r) { return plotted_value(r, m).has_value(); }))
      measures.push_back(m);
  std::vector<RindlerRegion> regions;
  for (RindlerRegion reg : kAllRegions)
    if (std::any_of(records.begin(), records.end(), [&](const auto& r) { return r.region == reg; }))
      regions.push_back(reg);
  if (measures.empty()) throw std::invalid_argument("plot: records carry no plottable measure");

  std::vector<Chart> charts;
  for (std::size_t row = 0; row < measures.size(); ++row) {
    for (std::size_t col = 0; col < regions.size(); ++col) {
      Chart c;
      c.measure = measures[row];
      c.region = regions[col];
      c.x_min = x_lo;
      c.x_max = x_hi;
      double lo = INFINITY, hi = -INFINITY;
      for (const auto& rec : records) {
        if (rec.region != c.region) continue;
        if (auto v = plotted_value(rec, c.measure)) {
          lo = std::min(lo, *v);
          hi = std::max(hi, *v);
        }
      }
      if (!std::isfinite(lo)) lo = hi = 0.0;
      if (hi - lo < 1e-9) {
        lo -= 0.5;
        hi += 0.5;
      }
      c.y_step = nice_step(hi - lo);
      c.y_min = std::floor(lo / c.y_step + 1e-9) * c.y_step;
      c.y_max = std::ceil(hi / c.y_step - 1e-9) * c.y_step;
      c.frame = {static_cast<double>(col) * kPanelWidth + kMarginLeft,
                 static_cast<double>(row) * kPanelHeight + kMarginTop,
                 kPanelWidth - kMarginLeft - kMarginRight, kPanelHeight - kMarginTop - kMarginBottom};
      charts.push_back(c);
    }
  }
  return charts;
}

std::string render_svg(std::span<const MeasureRecord> records) {
  const auto charts = plan_charts(records);
  std::size_t cols = 0;
  for (const auto& c : charts) cols += (c.measure == charts.front().measure);
  const std::size_t rows = charts.size() / cols;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(cols * kPanelWidth, 0)
      << "\" height=\"" << num(rows * kPanelHeight, 0) << "\" viewBox=\"0 0 "
      << num(cols * kPanelWidth, 0) << " " << num(rows * kPanelHeight, 0)
      << "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (const auto& c : charts) {
    const auto& f = c.frame;
    svg << "<g class=\"chart\" id=\"" << measure_slug(c.measure) << "-" << to_string(c.region) << "\">\n";
    svg << "<text x=\"" << format_px(f.left + f.width / 2) << "\" y=\"" << format_px(f.top - 14)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << measure_title(c.measure) << ", region "
        << to_string(c.region) << "</text>\n";
    svg << "<rect x=\"" << format_px(f.left) << "\" y=\"" << format_px(f.top) << "\" width=\""
        << format_px(f.width) << "\" height=\"" << format_px(f.height)
        << "\" fill=\"none\" stroke=\"#000000\"/>\n";

    const int ydec = tick_decimals(c.y_step);
    const int nticks = static_cast<int>(std::lround((c.y_max - c.y_min) / c.y_step));
    for (int i = 0; i <= nticks; ++i) {
      const double v = c.y_min + i * c.y_step;
      const double y = c.px_y(v);
      svg << "<line x1=\"" << format_px(f.left - 4) << "\" y1=\"" << format_px(y) << "\" x2=\""
          << format_px(f.left) << "\" y2=\"" << format_px(y) << "\" stroke=\"#000000\"/>\n";
      svg << "<text x=\"" << format_px(f.left - 7) << "\" y=\"" << format_px(y + 4)
          << "\" text-anchor=\"end\">" << num(v, ydec) << "</text>\n";
    }
    const double x_step = nice_step(c.x_max - c.x_min);
    const int xdec = tick_decimals(x_step);
    for (double v = std::ceil(c.x_min / x_step - 1e-9) * x_step; v <= c.x_max + 1e-12; v += x_step) {
      const double x = c.px_x(v);
      svg << "<line x1=\"" << format_px(x) << "\" y1=\"" << format_px(f.top + f.height) << "\" x2=\""
          << format_px(x) << "\" y2=\"" << format_px(f.top + f.height + 4) << "\" stroke=\"#000000\"/>\n";
      svg << "<text x=\"" << format_px(x) << "\" y=\"" << format_px(f.top + f.height + 17)
          << "\" text-anchor=\"middle\">" << num(v, xdec) << "</text>\n";
    }
    svg << "<text x=\"" << format_px(f.left + f.width / 2) << "\" y=\""
        << format_px(f.top + f.height + 38) << "\" text-anchor=\"middle\">r</text>\n";
    svg << "<text x=\"" << format_px(f.left - 46) << "\" y=\"" << format_px(f.top + f.height / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << format_px(f.left - 46) << " "
        << format_px(f.top + f.height / 2) << ")\">" << axis_label(c.measure) << "</text>\n";

    std::size_t legend_row = 0;
    for (StateFamily fam : kCurveOrder) {
      std::vector<const MeasureRecord*> pts;
      for (const auto& rec : records)
        if (rec.family == fam && rec.region == c.region && plotted_value(rec, c.measure)) pts.push_back(&rec);
      if (pts.empty()) continue;
      std::stable_sort(pts.begin(), pts.end(), [](auto* a, auto* b) { return a->r_a < b->r_a; });
      svg << "<polyline id=\"" << curve_id(c.measure, c.region, fam) << "\" fill=\"none\" stroke=\""
          << colour(fam) << "\" stroke-width=\"1.8\"" << dash_style(fam) << " points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) svg << ' ';
        svg << format_px(c.px_x(pts[i]->r_a)) << ',' << format_px(c.px_y(*plotted_value(*pts[i], c.measure)));
      }
      svg << "\"/>\n";

      const double ly = f.top + 12 + 18.0 * static_cast<double>(legend_row++);
      const double lx = f.left + f.width + 10;
      svg << "<line x1=\"" << format_px(lx) << "\" y1=\"" << format_px(ly) << "\" x2=\""
          << format_px(lx + 28) << "\" y2=\"" << format_px(ly) << "\" stroke=\"" << colour(fam)
          << "\" stroke-width=\"1.8\"" << dash_style(fam) << "/>\n";
      svg << "<text x=\"" << format_px(lx + 34) << "\" y=\"" << format_px(ly + 4) << "\">"
          << display_name(fam) << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(std::span<const MeasureRecord> records, const std::string& path) {
  const std::string svg = render_svg(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open '" + path + "' for writing");
  out << svg;
  out.flush();
  if (!out) throw OutputError("failed writing '" + path + "'");
}

}  // namespace rindler
