#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rindler/tensor.hpp"

namespace rindler {

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kMinEigenvalueTolerance = -1e-10;

/// A validated density operator over a tensor product of subsystems.
///
/// Construction checks Hermiticity (||M - M^dagger||_F <= 1e-10 max(1, ||M||_F)),
/// unit trace within 1e-12 and a spectrum bounded below by -1e-10, and throws
/// NumericInvariantError otherwise.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims);

  /// |psi><psi|. Positivity holds by construction so only the norm is checked.
  static DensityMatrix pure(std::span<const Complex> amplitudes,
                            std::vector<std::size_t> subsystem_dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& subsystem_dims() const noexcept { return dims_; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }
  std::size_t subsystem_count() const noexcept { return dims_.size(); }

  /// Tr(rho^2).
  double purity() const;

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims);

  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
};

/// Reduced state on the `keep` subsystems, in their original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Partial transpose of one subsystem. The result is Hermitian but need not be
/// positive, so it is returned as a bare matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace rindler
