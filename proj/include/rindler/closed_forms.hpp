// Reference closed-form density operators and fidelities of the accelerated
// channels, transcribed as printed (coefficient slips included), and an
// auditor that compares them with the first-principles construction in
// states.hpp.
//
// Coefficients use c_k = cos r_k, s_k = sin r_k with k = 1, 2, 3 for modes
// a, b, c. All transcriptions assume phi = 0.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rindler/states.hpp"
#include "rindler/tensor.hpp"

namespace rindler {

enum class ClosedFormKind { DENSITY, FIDELITY };

struct ClosedFormId {
  StateFamily family = StateFamily::GHZ;
  RindlerRegion region = RindlerRegion::I;
  ClosedFormKind kind = ClosedFormKind::DENSITY;

  bool operator==(const ClosedFormId&) const = default;
};

/// The twelve (family, region, kind) combinations, densities first.
std::vector<ClosedFormId> all_closed_form_ids();

/// e.g. "rho_GHZ^(I)" or "F_W^(II)".
std::string label(const ClosedFormId& id);

/// Raw 8x8 transcription; not Hermitized and not renormalized.
ComplexMatrix closed_form_density(const ClosedFormId& id, const AccelerationTriple& accel);

double closed_form_fidelity(const ClosedFormId& id, const AccelerationTriple& accel);

struct EntryMismatch {
  std::string row_ket;
  std::string col_ket;
  Complex closed_form;
  Complex pipeline;
};

/// A known slip in a printed formula whose effect on the residual
/// (pipeline minus closed form) has been verified across all samples.
struct ResidualMatch {
  std::string description;
  double max_deviation = 0.0;
};

struct DiscrepancyReport {
  ClosedFormId id;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Hermitized closed form against the pipeline; 0 for FIDELITY ids.
  double max_abs_entry_error = 0.0;
  /// |F_closed - F_pipeline|; for DENSITY ids the closed form's fidelity is
  /// <psi|(M + M^dagger)/2|psi>.
  double max_fidelity_error = 0.0;
  double max_trace_deviation = 0.0;
  /// ||M - M^dagger||_F of the raw transcription.
  double max_raw_asymmetry = 0.0;
  /// Same comparison at r = (0, 0, 0), not counted among the samples.
  double zero_acceleration_error = 0.0;
  std::array<double, 3> worst_r{};
  /// Entries differing by more than 1e-10 at the worst sample.
  std::vector<EntryMismatch> mismatched_entries;
  std::optional<ResidualMatch> residual_match;
  std::string residual_formula_note;

  double max_error() const {
    return max_abs_entry_error > max_fidelity_error ? max_abs_entry_error : max_fidelity_error;
  }
};

inline constexpr double kAuditMismatchThreshold = 1e-10;

/// Uniform triples in [0, pi/4]^3 drawn from a seeded mt19937_64; the same
/// (count, seed) always yields the same triples.
std::vector<AccelerationTriple> audit_samples(std::size_t count, std::uint64_t seed);

DiscrepancyReport audit(const ClosedFormId& id, std::size_t sample_count, std::uint64_t seed);

/// Structured text block for one report.
std::string format_report(const DiscrepancyReport& report);
std::string format_reports(std::span<const DiscrepancyReport> reports);

}  // namespace rindler
