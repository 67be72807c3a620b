#ifndef WALKZETA_MATRIX_HPP
#define WALKZETA_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace walkzeta {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. The universal numeric carrier: coin
/// matrices, Fourier blocks, full torus operators, arc operators.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a);

ComplexMatrix conjugate_transpose(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// max_ij |a_ij - b_ij|; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max_ij |a_ij|
double max_abs(const ComplexMatrix& a);

}  // namespace walkzeta

#endif
