#include "rindler/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rindler {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape() + " vs " + b.shape());
  }
}

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void require_dims_match(const ComplexMatrix& m, std::span<const std::size_t> dims,
                        const char* op) {
  if (!m.is_square()) {
    throw DimensionError(std::string(op) + ": matrix " + m.shape() + " is not square");
  }
  if (dims.empty() || product(dims) != m.rows() ||
      std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) {
    std::ostringstream msg;
    msg << op << ": subsystem dims do not multiply to " << m.rows();
    throw DimensionError(msg.str());
  }
}

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

// Full-space index contribution of every multi-index over `subset`,
// enumerated in big-endian order of the subset.
std::vector<std::size_t> subset_offsets(std::span<const std::size_t> dims,
                                        std::span<const std::size_t> strides,
                                        std::span<const std::size_t> subset) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t k : subset) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[k]);
    for (std::size_t base : offsets) {
      for (std::size_t digit = 0; digit < dims[k]; ++digit) next.push_back(base + digit * strides[k]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

struct JacobiResult {
  std::vector<double> values;
  ComplexMatrix vectors;
};

JacobiResult jacobi(const ComplexMatrix& input, bool want_vectors) {
  if (!input.is_square()) {
    throw DimensionError("hermitian_eig: matrix " + input.shape() + " is not square");
  }
  const std::size_t n = input.rows();
  if (n == 0 || n > kMaxEigenDimension) {
    throw DimensionError("hermitian_eig: dimension " + std::to_string(n) + " outside [1, 64]");
  }
  const double norm = frobenius_norm(input);
  const double asym = hermitian_asymmetry(input);
  if (asym > kHermitianTolerance * norm) {
    std::ostringstream msg;
    msg << "hermitian_eig: input is not Hermitian, ||A - A^dagger||_F = " << asym
        << " against ||A||_F = " << norm;
    throw NumericInvariantError(msg.str());
  }

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  const double target = 1e-14 * norm;
  constexpr int kMaxSweeps = 100;
  bool converged = off_mass() <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Below round-off relative to both diagonal entries: annihilating
        // it would not change either eigenvalue.
        if (sweep > 3 && mag <= 1e-18 * std::abs(app) && mag <= 1e-18 * std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const Complex phase = a(p, q) / mag;  // e^{i theta}
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = [[c, s e^{i theta}], [-s e^{-i theta}, c]] on (p, q); A <- J^dagger A J.
        const Complex jpq = s * phase;
        const Complex jqp = -s * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * jpq + akq * c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * c + vkq * jqp;
            v(k, q) = vkp * jpq + vkq * c;
          }
        }
      }
    }
    converged = !rotated || off_mass() <= target;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "hermitian_eig: no convergence after " << kMaxSweeps
        << " sweeps, off-diagonal mass " << off_mass();
    throw NumericInvariantError(msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  JacobiResult result;
  result.values.reserve(n);
  for (std::size_t i : order) result.values.push_back(a(i, i).real());
  if (want_vectors) {
    result.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t src = order[col];
      std::size_t lead = 0;
      for (std::size_t k = 1; k < n; ++k)
        if (std::abs(v(k, src)) > std::abs(v(lead, src)) + 1e-14) lead = k;
      const Complex unphase = std::conj(v(lead, src)) / std::abs(v(lead, src));
      for (std::size_t k = 0; k < n; ++k) result.vectors(k, col) = v(k, src) * unphase;
    }
  }
  return result;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + shape());
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

std::string ComplexMatrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("product: shape mismatch " + a.shape() + " vs " + b.shape());
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "addition");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtraction");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix " + a.shape() + " is not square");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

double hermitian_asymmetry(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermitian_asymmetry: matrix " + a.shape() + " is not square");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_dims_match(m, dims, "partial_trace");
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw DimensionError("partial_trace: subsystem index " + std::to_string(k) +
                           " out of range for " + std::to_string(dims.size()) + " subsystems");
    }
    if (kept[k]) throw DimensionError("partial_trace: subsystem " + std::to_string(k) + " repeated");
    kept[k] = true;
  }
  std::vector<std::size_t> kept_idx;
  std::vector<std::size_t> traced_idx;
  for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? kept_idx : traced_idx).push_back(k);

  const auto strides = strides_of(dims);
  const auto kept_off = subset_offsets(dims, strides, kept_idx);
  const auto traced_off = subset_offsets(dims, strides, traced_idx);

  ComplexMatrix out(kept_off.size(), kept_off.size());
  for (std::size_t i = 0; i < kept_off.size(); ++i)
    for (std::size_t j = 0; j < kept_off.size(); ++j) {
      Complex s{};
      for (std::size_t t : traced_off) s += m(kept_off[i] + t, kept_off[j] + t);
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem) {
  require_dims_match(m, dims, "partial_transpose");
  if (subsystem >= dims.size()) {
    throw DimensionError("partial_transpose: subsystem index " + std::to_string(subsystem) +
                         " out of range for " + std::to_string(dims.size()) + " subsystems");
  }
  const std::size_t stride = strides_of(dims)[subsystem];
  const std::size_t d = dims[subsystem];
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t row = 0; row < m.rows(); ++row) {
    const std::size_t rd = (row / stride) % d;
    for (std::size_t col = 0; col < m.cols(); ++col) {
      const std::size_t cd = (col / stride) % d;
      out(row - rd * stride + cd * stride, col - cd * stride + rd * stride) = m(row, col);
    }
  }
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& a) {
  auto r = jacobi(a, true);
  return {std::move(r.values), std::move(r.vectors)};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  return jacobi(a, false).values;
}

}  // namespace rindler
