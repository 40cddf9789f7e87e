// Record serialization: CSV (golden-file stable) and JSONL.
#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "rindler/sweep.hpp"

namespace rindler {

/// Raised when an output file cannot be opened or written. Carries the path.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader =
    "family,region,r_a,r_b,r_c,fidelity,c_ab,c_ac,c_bc,capacity_avg,neg_a_bc,neg_b_ac,neg_c_ab,neg_mean";

/// 12 significant digits in positional notation ('.' separator); zero prints
/// as 0.000000000000 and magnitudes >= 1e6 switch to exponent form.
std::string format_real(double value);

void write_csv(std::span<const MeasureRecord> records, std::ostream& out);
void write_jsonl(std::span<const MeasureRecord> records, std::ostream& out);

/// Writes to `path`, or stdout when path is "-".
void write_records(std::span<const MeasureRecord> records, OutputFormat format,
                   const std::string& path);

}  // namespace rindler
