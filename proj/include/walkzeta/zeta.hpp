#ifndef WALKZETA_ZETA_HPP
#define WALKZETA_ZETA_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "walkzeta/operators.hpp"

namespace walkzeta {

/// Visit the wavenumber grid {2 pi k / n : k in {0..n-1}^dim} in lexicographic
/// order. The serial traversal order is fixed so reductions are reproducible.
void for_each_grid_point(int dim, int n, const std::function<void(std::span<const double>)>& fn);

/// max over the n-per-axis grid of the largest eigenvalue modulus of the
/// Fourier block. Heuristic convergence guard, not a certified bound.
double spectral_radius_bound(const WalkModel& model, int n_per_axis);

/// zeta-bar(A, T^d_N, u)^{-1} = exp[ N^{-d} sum_k log det(I - u M(k)) ],
/// principal log branch. Throws ConvergenceDiskError unless |u| rho_max < 1.
Complex zeta_inv_finite(const WalkModel& model, const TorusSpec& torus, Complex u);

/// N -> infinity limit by periodic trapezoid with n_quad points per axis
/// (identical code path to the finite-N sum).
Complex zeta_inv_limit(const WalkModel& model, Complex u, int n_quad);

/// C_r(A, T^d_N) = N^{-d} sum_k Tr(M(k)^r).
Complex c_r_finite(const WalkModel& model, const TorusSpec& torus, int r);

/// C_1 .. C_{r_max} over an n-per-axis grid in one sweep.
std::vector<Complex> c_r_profile(const WalkModel& model, int n_per_axis, int r_max);

enum class CrRoute { Quadrature, Weight };

/// lim_N C_r by quadrature (n_quad points per axis) or by the return matrix
/// weight Tr(Phi_r(0)).
Complex c_r_limit(const WalkModel& model, int r, CrRoute route, int n_quad = 512);

/// | -log zeta_inv_finite(u) - sum_{r<=r_max} C_r u^r / r |.
double series_consistency(const WalkModel& model, const TorusSpec& torus, Complex u, int r_max);

/// Evaluation record emitted by the CLI.
struct ZetaReport {
  std::string model_id;
  Complex u;
  int grid = 0;           // N (finite route) or n_quad (limit route)
  std::string route;      // "finite" | "limit"
  Complex zeta_inv;
  std::vector<Complex> c_r;
  std::map<std::string, double> residuals;
};

/// Assemble a report row; fills the closed-form residual when the model
/// matches a tabulated family, and the full-operator route residual on the
/// finite route when the dense operator fits the cap.
ZetaReport zeta_report(const WalkModel& model, Complex u, int grid, bool finite_route,
                       int r_max = 0);

}  // namespace walkzeta

#endif
