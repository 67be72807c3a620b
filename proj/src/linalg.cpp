#include "walkzeta/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "walkzeta/errors.hpp"

namespace walkzeta {

Complex determinant(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("determinant: non-square matrix");
  const std::size_t n = m.rows();
  ComplexMatrix lu = m;
  Complex det(1.0, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    // pivot on max modulus in this column
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double v = std::abs(lu(i, col));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(lu(pivot, j), lu(col, j));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Complex factor = lu(i, col) / lu(col, col);
      if (factor == Complex(0.0, 0.0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) lu(i, j) -= factor * lu(col, j);
    }
  }
  return det;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("eigenvalues: non-square matrix");
  if (m.rows() > 64) throw SizeCapError("eigenvalues: size exceeds 64");
  const auto n = static_cast<Eigen::Index>(m.rows());
  if (n == 1) return {m(0, 0)};
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) em(i, j) = m(std::size_t(i), std::size_t(j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NoConvergenceError("eigenvalues: Schur iteration did not converge");
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[std::size_t(i)] = solver.eigenvalues()(i);
  return out;
}

Complex trace_of_power(const ComplexMatrix& m, int r) {
  if (!m.square()) throw DimensionError("trace_of_power: non-square matrix");
  if (r < 1) throw InvalidArgument("trace_of_power: r must be >= 1");
  ComplexMatrix power = m;
  for (int i = 1; i < r; ++i) power = power * m;
  return trace(power);
}

std::vector<Complex> traces_of_powers(const ComplexMatrix& m, int r_max) {
  if (!m.square()) throw DimensionError("traces_of_powers: non-square matrix");
  if (r_max < 1) throw InvalidArgument("traces_of_powers: r_max must be >= 1");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(r_max));
  ComplexMatrix power = m;
  out.push_back(trace(power));
  for (int r = 2; r <= r_max; ++r) {
    power = power * m;
    out.push_back(trace(power));
  }
  return out;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hadamard: shape mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] *= b.data()[i];
  return out;
}

double spectral_radius(const ComplexMatrix& m) {
  double rho = 0.0;
  for (const Complex& lambda : eigenvalues(m)) rho = std::max(rho, std::abs(lambda));
  return rho;
}

}  // namespace walkzeta
