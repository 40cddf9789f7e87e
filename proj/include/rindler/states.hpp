// Tripartite Minkowski states and their Rindler-frame images.
//
// Each Minkowski qubit k in {a, b, c} is mapped by the single-mode fermionic
// Unruh transformation
//
//   |0>_M -> cos r_k |0>_I |0>_II + e^{-i phi_k} sin r_k |1>_I |1>_II
//   |1>_M -> |1>_I |0>_II
//
// giving a six-mode pure state laid out as [a_I, b_I, c_I, a_II, b_II, c_II].
// Region I (fermions) keeps the first three modes, region II (anti-fermions)
// the last three; the region-II basis uses the same {0, 1} labels.
#pragma once

#include <array>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "rindler/density.hpp"
#include "rindler/tensor.hpp"

namespace rindler {

enum class StateFamily { W, GHZ, GHZ_LIKE };
enum class RindlerRegion { I, II };

inline constexpr std::array<StateFamily, 3> kAllFamilies{StateFamily::W, StateFamily::GHZ,
                                                        StateFamily::GHZ_LIKE};
inline constexpr std::array<RindlerRegion, 2> kAllRegions{RindlerRegion::I, RindlerRegion::II};

/// "W", "GHZ", "GHZ_LIKE".
std::string_view to_string(StateFamily family);
/// "I", "II".
std::string_view to_string(RindlerRegion region);
/// Human label used in plots: "W", "GHZ", "GHZ-like".
std::string_view display_name(StateFamily family);

/// Accepts w, ghz, ghz-like / ghz_like (any case). Throws std::invalid_argument
/// naming the token and the valid set.
StateFamily parse_family(std::string_view token);
/// Accepts I / II (any case).
RindlerRegion parse_region(std::string_view token);

inline constexpr double kMaxRindlerParameter = std::numbers::pi / 4.0;

/// Rindler parameters r_k in [0, pi/4] and Unruh phases phi_k.
class AccelerationTriple {
 public:
  AccelerationTriple() = default;
  /// Throws std::invalid_argument when any r is outside [0, pi/4] or any
  /// field is not finite.
  AccelerationTriple(std::array<double, 3> r, std::array<double, 3> phi = {0.0, 0.0, 0.0});

  static AccelerationTriple equal(double r) { return AccelerationTriple({r, r, r}); }

  const std::array<double, 3>& r() const noexcept { return r_; }
  const std::array<double, 3>& phi() const noexcept { return phi_; }
  double cos_r(std::size_t k) const;
  double sin_r(std::size_t k) const;

 private:
  std::array<double, 3> r_{};
  std::array<double, 3> phi_{};
};

/// Amplitude vector over labeled qubit modes (big-endian basis order).
class PureState {
 public:
  /// Throws DimensionError on inconsistent sizes and NumericInvariantError
  /// when the norm differs from 1 by more than 1e-12.
  PureState(std::vector<std::string> labels, std::vector<Complex> amplitudes);

  std::size_t mode_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::vector<std::size_t> mode_dims() const { return std::vector<std::size_t>(labels_.size(), 2); }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::size_t basis_index) const { return amplitudes_.at(basis_index); }

  DensityMatrix projector() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Complex> amplitudes_;
};

PureState minkowski_state(StateFamily family);

PureState unruh_expand(const PureState& state, const AccelerationTriple& accel);

/// Reduce the six-mode state to the 8x8 density operator of one region.
DensityMatrix region_density(const PureState& rindler_state, RindlerRegion region);

/// region_density(unruh_expand(minkowski_state(family), accel), region).
DensityMatrix accelerated_channel(StateFamily family, const AccelerationTriple& accel,
                                  RindlerRegion region);

/// Basis ket label of a three-qubit index, e.g. 5 -> "101".
std::string ket_label(std::size_t index, std::size_t qubits = 3);

}  // namespace rindler
