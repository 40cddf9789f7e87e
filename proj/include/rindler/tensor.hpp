// Dense complex linear algebra for small (<= 64x64) matrices.
//
// Everything here is a value type or a pure function. Subsystem indexing is
// big-endian: subsystem 0 is the most significant tensor factor, so the basis
// index of |b0 b1 ... b{n-1}> is sum_k b_k * prod_{j>k} dims[j].
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rindler {

using Complex = std::complex<double>;

/// Raised when operands have incompatible shapes or an index is out of range.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed quantity violates a physical or numerical
/// invariant (non-Hermitian input, negative spectrum, lost normalization).
class NumericInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v| for an amplitude vector v.
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::string shape() const;

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// ||A - A^dagger||_F.
double hermitian_asymmetry(const ComplexMatrix& a);

/// Kronecker product: entry (i, j) = A[i / rB, j / cB] * B[i % rB, j % cB].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over every subsystem not in `keep`. `keep` must be nonempty, sorted
/// order is not required; kept factors retain their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Transpose the row/column indices of a single subsystem.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr std::size_t kMaxEigenDimension = 64;

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Sweeps all (p, q) pairs until the off-diagonal Frobenius mass is at most
/// 1e-14 * ||A||_F, or a sweep performs no rotation, with a hard cap of 100
/// sweeps. Input must be square, dimension <= 64, and Hermitian within
/// 1e-10 relative to ||A||_F; it is symmetrized before iterating. Each
/// eigenvector is phased so its largest-modulus component is real positive.
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

/// Eigenvalues only; same algorithm and preconditions as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace rindler
