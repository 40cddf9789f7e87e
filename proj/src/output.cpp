#include "rindler/output.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string_view>

namespace rindler {

namespace {

std::string fixed(double value, int decimals) {
  const int n = std::snprintf(nullptr, 0, "%.*f", decimals, value);
  std::string s(static_cast<std::size_t>(n) + 1, '\0');
  std::snprintf(s.data(), s.size(), "%.*f", decimals, value);
  s.pop_back();
  return s;
}

std::size_t significant_digits(std::string_view s) {
  std::size_t count = 0;
  bool leading = true;
  for (char ch : s) {
    if (ch < '0' || ch > '9') continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

std::string optional_field(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

struct Column {
  const char* name;
  std::optional<double> MeasureRecord::*field;
};

constexpr Column kMeasureColumns[] = {
    {"fidelity", &MeasureRecord::fidelity},   {"c_ab", &MeasureRecord::c_ab},
    {"c_ac", &MeasureRecord::c_ac},           {"c_bc", &MeasureRecord::c_bc},
    {"capacity_avg", &MeasureRecord::capacity_avg}, {"neg_a_bc", &MeasureRecord::neg_a_bc},
    {"neg_b_ac", &MeasureRecord::neg_b_ac},   {"neg_c_ab", &MeasureRecord::neg_c_ab},
    {"neg_mean", &MeasureRecord::neg_mean},
};

template <typename Writer>
void with_output(const std::string& path, Writer&& write) {
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) throw OutputError("failed writing '" + path + "'");
}

}  // namespace

std::string format_real(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("format_real: non-finite value");
  if (value == 0.0) return fixed(0.0, 12);  // also folds -0
  const double mag = std::abs(value);
  if (mag >= 1e6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", value);
    return buf;
  }
  int decimals = 11 - static_cast<int>(std::floor(std::log10(mag)));
  std::string s = fixed(value, decimals);
  // Rounding can carry into a new leading digit (9.99...9 -> 10.0...0).
  if (significant_digits(s) > 12 && decimals > 0) s = fixed(value, decimals - 1);
  return s;
}

void write_csv(std::span<const MeasureRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& rec : records) {
    out << to_string(rec.family) << ',' << to_string(rec.region) << ',' << format_real(rec.r_a) << ','
        << format_real(rec.r_b) << ',' << format_real(rec.r_c);
    for (const auto& col : kMeasureColumns) out << ',' << optional_field(rec.*col.field);
    out << '\n';
  }
}

void write_jsonl(std::span<const MeasureRecord> records, std::ostream& out) {
  for (const auto& rec : records) {
    nlohmann::ordered_json row;
    row["family"] = to_string(rec.family);
    row["region"] = to_string(rec.region);
    row["r_a"] = rec.r_a;
    row["r_b"] = rec.r_b;
    row["r_c"] = rec.r_c;
    for (const auto& col : kMeasureColumns) {
      const auto& v = rec.*col.field;
      row[col.name] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    }
    out << row.dump() << '\n';
  }
}

void write_records(std::span<const MeasureRecord> records, OutputFormat format,
                   const std::string& path) {
  with_output(path, [&](std::ostream& out) {
    if (format == OutputFormat::CSV) write_csv(records, out);
    else write_jsonl(records, out);
  });
}

}  // namespace rindler
