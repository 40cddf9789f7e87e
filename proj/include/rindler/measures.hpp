// Channel figures of merit: linear fidelity, von Neumann entropy, dense-coding
// capacity, and one-vs-rest negativity.
#pragma once

#include <cstddef>

#include "rindler/density.hpp"
#include "rindler/states.hpp"

namespace rindler {

/// Eigenvalues within this distance below zero are treated as exact zeros.
inline constexpr double kSpectrumFloor = 1e-12;

/// <psi|rho|psi>, clamped to [0, 1]. Throws when the raw overlap leaves
/// [-1e-12, 1 + 1e-12] or dimensions differ.
double fidelity(const DensityMatrix& rho, const PureState& target);

/// -sum lambda log2 lambda; eigenvalues <= 1e-12 contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

/// Dense-coding capacity log2(2) + S(rho_receiver) - S(rho_xy) of a two-qubit
/// state. Not clamped; it may be negative.
double pair_capacity(const DensityMatrix& rho_xy, std::size_t receiver);

struct CapacitySummary {
  double c_ab = 0.0;
  double c_ac = 0.0;
  double c_bc = 0.0;
  double average = 0.0;
};

/// Capacities of the ab, ac and bc reductions with the second party of each
/// pair as receiver, and their mean.
CapacitySummary average_capacity(const DensityMatrix& rho_abc);

/// 2 * sum of |negative eigenvalues| of the partial transpose on `part`.
double negativity(const DensityMatrix& rho_abc, std::size_t part);

struct NegativitySummary {
  double n_a_bc = 0.0;
  double n_b_ac = 0.0;
  double n_c_ab = 0.0;
  double mean = 0.0;
};

NegativitySummary negativity_summary(const DensityMatrix& rho_abc);

}  // namespace rindler
