#include "rindler/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rindler {

namespace {

void check_dims(const ComplexMatrix& m, const std::vector<std::size_t>& dims) {
  if (!m.is_square()) throw DimensionError("DensityMatrix: matrix " + m.shape() + " is not square");
  const std::size_t prod =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (dims.empty() || prod != m.rows()) {
    throw DimensionError("DensityMatrix: subsystem dims multiply to " + std::to_string(prod) +
                         ", matrix is " + m.shape());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims)
    : matrix_(std::move(matrix)), dims_(std::move(subsystem_dims)) {
  check_dims(matrix_, dims_);
  const double asym = hermitian_asymmetry(matrix_);
  if (asym > kHermitianTolerance * std::max(1.0, frobenius_norm(matrix_))) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian, ||M - M^dagger||_F = " << asym;
    throw NumericInvariantError(msg.str());
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - Complex{1.0}) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "DensityMatrix: trace " << tr.real() << (tr.imag() < 0 ? "-" : "+")
        << std::abs(tr.imag()) << "i differs from 1";
    throw NumericInvariantError(msg.str());
  }
  const double lowest = hermitian_eigenvalues(matrix_).front();
  if (lowest < kMinEigenvalueTolerance) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << lowest;
    throw NumericInvariantError(msg.str());
  }
}

DensityMatrix::DensityMatrix(Unchecked, ComplexMatrix matrix,
                             std::vector<std::size_t> subsystem_dims)
    : matrix_(std::move(matrix)), dims_(std::move(subsystem_dims)) {}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes,
                                  std::vector<std::size_t> subsystem_dims) {
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "DensityMatrix::pure: squared norm " << norm2 << " differs from 1";
    throw NumericInvariantError(msg.str());
  }
  auto m = ComplexMatrix::outer(amplitudes, amplitudes);
  check_dims(m, subsystem_dims);
  return DensityMatrix(Unchecked{}, std::move(m), std::move(subsystem_dims));
}

double DensityMatrix::purity() const {
  double s = 0.0;
  for (const Complex& z : matrix_.entries()) s += std::norm(z);
  return s;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  auto reduced = partial_trace(rho.matrix(), rho.subsystem_dims(), keep);
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> dims;
  for (std::size_t k : sorted) dims.push_back(rho.subsystem_dims()[k]);
  return DensityMatrix(std::move(reduced), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  return partial_transpose(rho.matrix(), rho.subsystem_dims(), subsystem);
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

}  // namespace rindler
