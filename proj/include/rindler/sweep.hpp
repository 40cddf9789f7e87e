// Acceleration sweeps over families, regions and measures.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rindler/states.hpp"

namespace rindler {

enum class SweepMode { EQUAL, GRID };
enum class Measure { FIDELITY, CAPACITY, NEGATIVITY };
enum class OutputFormat { CSV, JSONL };

inline constexpr std::size_t kMaxGridSteps = 64;

/// Bad flag, value, or config-file line. The message names the offending token.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
  std::vector<StateFamily> families{kAllFamilies.begin(), kAllFamilies.end()};
  std::vector<RindlerRegion> regions{kAllRegions.begin(), kAllRegions.end()};
  double r_start = 0.0;
  double r_end = kMaxRindlerParameter;
  std::size_t steps = 100;
  SweepMode mode = SweepMode::EQUAL;
  std::vector<Measure> measures{Measure::FIDELITY, Measure::CAPACITY, Measure::NEGATIVITY};
  std::string output_path = "-";  // "-" is stdout
  OutputFormat format = OutputFormat::CSV;
  std::optional<std::string> plot_path;
  std::uint64_t seed = 1;
  /// Worker threads for run_sweep; 0 picks hardware concurrency.
  std::size_t threads = 1;

  bool wants(Measure m) const;
  /// Throws UsageError when an invariant does not hold.
  void validate() const;
};

/// Parse `sweep` flags. `config_text`, when given, is a `key = value` file
/// (keys are long flag names, `#` starts a comment) whose values the flags
/// override. Without `config_text`, a `--config <path>` flag is read from disk.
SweepConfig parse_sweep_config(std::span<const std::string> args,
                               std::optional<std::string> config_text = std::nullopt);

/// Sorted, deduplicated lists; families in W, GHZ, GHZ_LIKE order.
std::vector<StateFamily> parse_family_list(std::span<const std::string> tokens);
std::vector<RindlerRegion> parse_region_list(std::span<const std::string> tokens);
std::vector<Measure> parse_measure_list(std::string_view comma_list);

struct MeasureRecord {
  StateFamily family = StateFamily::W;
  RindlerRegion region = RindlerRegion::I;
  double r_a = 0.0;
  double r_b = 0.0;
  double r_c = 0.0;
  std::optional<double> fidelity;
  std::optional<double> c_ab, c_ac, c_bc, capacity_avg;
  std::optional<double> neg_a_bc, neg_b_ac, neg_c_ab, neg_mean;
};

/// The r triples visited by one (family, region) pass, in grid order. GRID
/// mode varies r_c fastest.
std::vector<AccelerationTriple> sweep_points(const SweepConfig& config);

/// Evaluate the requested measures at one point.
MeasureRecord evaluate_point(StateFamily family, RindlerRegion region,
                             const AccelerationTriple& accel, std::span<const Measure> measures);

/// One record per (family, region, grid point), ordered by family, then
/// region, then grid index, for any thread count. Numeric invariant failures
/// are rethrown as NumericInvariantError naming the family, region and r.
std::vector<MeasureRecord> run_sweep(const SweepConfig& config);

}  // namespace rindler
