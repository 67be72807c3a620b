#ifndef WALKZETA_CLOSED_FORMS_HPP
#define WALKZETA_CLOSED_FORMS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walkzeta/models.hpp"

namespace walkzeta {

/// Families with a tabulated determinant factorization
/// det(I - u M(angles)) = prefactor(u) * F(angles, u).
enum class ClosedFormFamily {
  QW3,        // three-state quantum walk, either shift
  CRW3,       // its correlated walk
  QW4_1D,     // four-state quantum walk on Z
  CRW4_1D,    //
  RWGeneral,  // multi-state random walk, arbitrary weights
  RWWindow,   // p_x = p* off the origin, p_0 at it
  RWUniform,  // p_x = 1/(2L+1) everywhere in the window
  QW4_2D,     // four-state quantum walk on Z^2
  CRW4_2D,    //
  GG1D3,      // generalized Grover coin, three-state on Z
  GG1D4,      // generalized Grover coin, four-state on Z
  GG2D,       // generalized Grover coin, four-state on Z^2
  GGTorus,    // generalized Grover coin on the d-torus, F-type only
};

struct ClosedFormId {
  ClosedFormFamily family;
  Shift shift = Shift::M;
  ModelParams params;
};

std::string closed_form_name(const ClosedFormId& id);

ClosedFormId qw3_form(double eta, Shift shift);
ClosedFormId crw3_form(double eta, Shift shift);
ClosedFormId qw4_1d_form(double p, Shift shift);
ClosedFormId crw4_1d_form(double p, Shift shift);
ClosedFormId qw4_2d_form(double p, Shift shift);
ClosedFormId crw4_2d_form(double p, Shift shift);
ClosedFormId rw_general_form(const std::map<int, double>& weights);
ClosedFormId rw_window_form(double p0, double pstar, int window);
ClosedFormId rw_uniform_form(int window);
ClosedFormId gg_form(GroverLattice lattice, double a, Shift shift, int torus_dim = 0);

/// The WalkModel the closed form describes.
WalkModel make_model(const ClosedFormId& id);

/// Closed form matching a constructed model, when the family is tabulated.
std::optional<ClosedFormId> closed_form_for(const WalkModel& model);

/// Leading u-factor outside the exponential mean; 1 when the family has none.
Complex prefactor(const ClosedFormId& id, Complex u);

/// The tabulated F(angles, u); angle count must match the lattice dimension.
Complex f_value(const ClosedFormId& id, std::span<const double> angles, Complex u);

bool has_closed_eigenvalues(const ClosedFormId& id);

/// The tabulated eigenvalue multiset of the Fourier block at the given angles.
/// Throws NoClosedFormError for families without a tabulated list.
std::vector<Complex> closed_eigenvalues(const ClosedFormId& id, std::span<const double> angles);

/// (1 + sqrt(1 - u^2)) / 2 for the simple random walk limit; |u| < 1.
double rw_limit_zeta_closed(double u);

/// Partial sum of -sum_{n>=1} (1/2n) C(2n,n) (x^2/4)^n, which converges to
/// log((1 + sqrt(1 - x^2))/2) for |x| < 1.
double log_series_lemma(double x, int n_terms);

struct ClosedFormCheck {
  double det_residual = 0.0;  // max |det(I - u M) - prefactor * F|
  double eig_residual = 0.0;  // max Hausdorff distance of eigenvalue multisets
  bool has_eigenvalues = false;
  double max() const { return det_residual > eig_residual ? det_residual : eig_residual; }
};

/// Grid verification of one closed form against the determinant and
/// eigenvalue routes: angle_points samples per axis, every u in `us`.
ClosedFormCheck verify_closed_form(const ClosedFormId& id, int angle_points,
                                   std::span<const Complex> us);

/// Symmetric Hausdorff distance between two complex multisets.
double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace walkzeta

#endif
