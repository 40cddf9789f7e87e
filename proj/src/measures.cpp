#include "rindler/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rindler {

namespace {

void require_qubits(const DensityMatrix& rho, std::size_t count, const char* op) {
  const auto& dims = rho.subsystem_dims();
  if (dims.size() != count || std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d != 2; })) {
    throw DimensionError(std::string(op) + ": expected a " + std::to_string(count) +
                         "-qubit state, got " + std::to_string(dims.size()) + " subsystems");
  }
}

}  // namespace

double fidelity(const DensityMatrix& rho, const PureState& target) {
  const auto& psi = target.amplitudes();
  if (psi.size() != rho.dimension()) {
    throw DimensionError("fidelity: state of dimension " + std::to_string(psi.size()) +
                         " against density matrix " + rho.matrix().shape());
  }
  Complex overlap{};
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j)
      overlap += std::conj(psi[i]) * rho.matrix()(i, j) * psi[j];
  const double f = overlap.real();
  if (f < -kTraceTolerance || f > 1.0 + kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "fidelity: overlap " << f << " outside [0, 1]";
    throw NumericInvariantError(msg.str());
  }
  return std::clamp(f, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix())) {
    if (lambda > kSpectrumFloor) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

double pair_capacity(const DensityMatrix& rho_xy, std::size_t receiver) {
  require_qubits(rho_xy, 2, "pair_capacity");
  if (receiver > 1) throw DimensionError("pair_capacity: receiver must be 0 or 1");
  const auto rho_receiver = partial_trace(rho_xy, {receiver});
  return 1.0 + von_neumann_entropy(rho_receiver) - von_neumann_entropy(rho_xy);
}

CapacitySummary average_capacity(const DensityMatrix& rho_abc) {
  require_qubits(rho_abc, 3, "average_capacity");
  auto pair = [&](std::size_t x, std::size_t y) {
    return pair_capacity(partial_trace(rho_abc, {x, y}), 1);
  };
  CapacitySummary out;
  out.c_ab = pair(0, 1);
  out.c_ac = pair(0, 2);
  out.c_bc = pair(1, 2);
  out.average = (out.c_ab + out.c_ac + out.c_bc) / 3.0;
  return out;
}

double negativity(const DensityMatrix& rho_abc, std::size_t part) {
  require_qubits(rho_abc, 3, "negativity");
  double sum = 0.0;
  for (double lambda : hermitian_eigenvalues(partial_transpose(rho_abc, part))) {
    if (lambda < -kSpectrumFloor) sum -= lambda;
  }
  return 2.0 * sum;
}

NegativitySummary negativity_summary(const DensityMatrix& rho_abc) {
  NegativitySummary out;
  out.n_a_bc = negativity(rho_abc, 0);
  out.n_b_ac = negativity(rho_abc, 1);
  out.n_c_ab = negativity(rho_abc, 2);
  out.mean = (out.n_a_bc + out.n_b_ac + out.n_c_ab) / 3.0;
  return out;
}

}  // namespace rindler
