#ifndef WALKZETA_LINALG_HPP
#define WALKZETA_LINALG_HPP

#include <vector>

#include "walkzeta/matrix.hpp"

namespace walkzeta {

/// Determinant by LU with partial pivoting (row pivot on max modulus).
Complex determinant(const ComplexMatrix& m);

/// All eigenvalues with multiplicity, unordered. Square input, size <= 64.
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

/// Tr(m^r) by repeated multiplication; r >= 1.
Complex trace_of_power(const ComplexMatrix& m, int r);

/// Traces of m^1 .. m^r_max in one sweep.
std::vector<Complex> traces_of_powers(const ComplexMatrix& m, int r_max);

/// Kronecker product with block layout a_ij * b.
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise (Hadamard) product; equal shapes required.
ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest eigenvalue modulus.
double spectral_radius(const ComplexMatrix& m);

}  // namespace walkzeta

#endif
