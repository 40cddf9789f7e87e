#include "rindler/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rindler {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

constexpr std::size_t kModes = 3;

}  // namespace

std::string_view to_string(StateFamily family) {
  switch (family) {
    case StateFamily::W: return "W";
    case StateFamily::GHZ: return "GHZ";
    case StateFamily::GHZ_LIKE: return "GHZ_LIKE";
  }
  return "?";
}

std::string_view to_string(RindlerRegion region) {
  return region == RindlerRegion::I ? "I" : "II";
}

std::string_view display_name(StateFamily family) {
  switch (family) {
    case StateFamily::W: return "W";
    case StateFamily::GHZ: return "GHZ";
    case StateFamily::GHZ_LIKE: return "GHZ-like";
  }
  return "?";
}

StateFamily parse_family(std::string_view token) {
  const std::string t = lowercase(token);
  if (t == "w") return StateFamily::W;
  if (t == "ghz") return StateFamily::GHZ;
  if (t == "ghz-like" || t == "ghz_like") return StateFamily::GHZ_LIKE;
  throw std::invalid_argument("unknown state family '" + std::string(token) +
                              "' (valid: w, ghz, ghz-like)");
}

RindlerRegion parse_region(std::string_view token) {
  const std::string t = lowercase(token);
  if (t == "i") return RindlerRegion::I;
  if (t == "ii") return RindlerRegion::II;
  throw std::invalid_argument("unknown region '" + std::string(token) + "' (valid: I, II)");
}

AccelerationTriple::AccelerationTriple(std::array<double, 3> r, std::array<double, 3> phi)
    : r_(r), phi_(phi) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (!std::isfinite(r_[k]) || !std::isfinite(phi_[k])) {
      throw std::invalid_argument("AccelerationTriple: non-finite field");
    }
    if (r_[k] < 0.0 || r_[k] > kMaxRindlerParameter) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "AccelerationTriple: r[" << k << "] = " << r_[k] << " outside [0, pi/4]";
      throw std::invalid_argument(msg.str());
    }
  }
}

double AccelerationTriple::cos_r(std::size_t k) const { return std::cos(r_.at(k)); }
double AccelerationTriple::sin_r(std::size_t k) const { return std::sin(r_.at(k)); }

PureState::PureState(std::vector<std::string> labels, std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.empty() || labels_.size() >= 8 || amplitudes_.size() != (std::size_t{1} << labels_.size())) {
    throw DimensionError("PureState: " + std::to_string(amplitudes_.size()) +
                         " amplitudes for " + std::to_string(labels_.size()) + " qubit modes");
  }
  double norm2 = 0.0;
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw NumericInvariantError("PureState: non-finite amplitude");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "PureState: squared norm " << norm2 << " differs from 1";
    throw NumericInvariantError(msg.str());
  }
}

DensityMatrix PureState::projector() const { return DensityMatrix::pure(amplitudes_, mode_dims()); }

PureState minkowski_state(StateFamily family) {
  std::vector<Complex> amps(8);
  switch (family) {
    case StateFamily::W:
      for (std::size_t i : {1, 2, 4}) amps[i] = 1.0 / std::sqrt(3.0);
      break;
    case StateFamily::GHZ:
      amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
      break;
    case StateFamily::GHZ_LIKE:
      for (std::size_t i : {1, 2, 4, 7}) amps[i] = 0.5;
      break;
  }
  return PureState({"a", "b", "c"}, std::move(amps));
}

PureState unruh_expand(const PureState& state, const AccelerationTriple& accel) {
  if (state.mode_count() != kModes) {
    throw DimensionError("unruh_expand: expected 3 modes, got " +
                         std::to_string(state.mode_count()));
  }
  std::array<double, kModes> c{};
  std::array<Complex, kModes> s{};
  for (std::size_t k = 0; k < kModes; ++k) {
    c[k] = accel.cos_r(k);
    s[k] = std::polar(1.0, -accel.phi()[k]) * accel.sin_r(k);
  }

  std::vector<Complex> out(std::size_t{1} << (2 * kModes));
  for (std::size_t basis = 0; basis < 8; ++basis) {
    const Complex amp = state.amplitude(basis);
    if (amp == Complex{}) continue;
    // pairs: bit k set means mode k lands in the |1>_I |1>_II branch.
    for (std::size_t pairs = 0; pairs < 8; ++pairs) {
      Complex term = amp;
      std::size_t region_i = 0;
      std::size_t region_ii = 0;
      bool allowed = true;
      for (std::size_t k = 0; k < kModes && allowed; ++k) {
        const std::size_t shift = kModes - 1 - k;
        const bool occupied = (basis >> shift) & 1U;
        const bool paired = (pairs >> shift) & 1U;
        if (occupied) {
          allowed = !paired;
          region_i |= std::size_t{1} << shift;
        } else if (paired) {
          term *= s[k];
          region_i |= std::size_t{1} << shift;
          region_ii |= std::size_t{1} << shift;
        } else {
          term *= c[k];
        }
      }
      if (allowed) out[(region_i << kModes) | region_ii] += term;
    }
  }
  return PureState({"a_I", "b_I", "c_I", "a_II", "b_II", "c_II"}, std::move(out));
}

DensityMatrix region_density(const PureState& rindler_state, RindlerRegion region) {
  if (rindler_state.mode_count() != 2 * kModes) {
    throw DimensionError("region_density: expected 6 modes, got " +
                         std::to_string(rindler_state.mode_count()));
  }
  static constexpr std::array<std::size_t, 3> kRegionI{0, 1, 2};
  static constexpr std::array<std::size_t, 3> kRegionII{3, 4, 5};
  return partial_trace(rindler_state.projector(),
                       region == RindlerRegion::I ? std::span<const std::size_t>(kRegionI)
                                                  : std::span<const std::size_t>(kRegionII));
}

DensityMatrix accelerated_channel(StateFamily family, const AccelerationTriple& accel,
                                  RindlerRegion region) {
  return region_density(unruh_expand(minkowski_state(family), accel), region);
}

std::string ket_label(std::size_t index, std::size_t qubits) {
  std::string s(qubits, '0');
  for (std::size_t k = 0; k < qubits; ++k)
    if ((index >> (qubits - 1 - k)) & 1U) s[k] = '1';
  return s;
}

}  // namespace rindler
