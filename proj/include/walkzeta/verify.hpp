#ifndef WALKZETA_VERIFY_HPP
#define WALKZETA_VERIFY_HPP

#include <string>
#include <vector>

#include "walkzeta/closed_forms.hpp"
#include "walkzeta/graph_zeta.hpp"

namespace walkzeta {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual < tolerance; }
};

/// Determinant identity det(I - u M) = prefactor * F over parameter, angle and
/// u grids for every tabulated family; tolerance 1e-9 (eigenvalue-list
/// Hausdorff checks at 1e-7 where eigenvalue lists exist).
std::vector<CheckResult> verify_suite_closed_forms();

/// Generalized Konno-Sato identity over the built-in graph family, a in
/// [0,1] grid, |u| <= 0.4; tolerance 1e-9. Includes the 2-regular
/// a-independence check at 1e-12 and the d-torus cross-route check at 1e-8.
std::vector<CheckResult> verify_suite_konno_sato();

/// Fourier factorization det(I - u M_A) = prod_k det(I - u M(k)) for every
/// family at dense-operator scale; relative tolerance 1e-8.
std::vector<CheckResult> verify_suite_factorization();

/// All tabulated walk models at representative parameters, one entry per
/// (name, model, torus side suitable for dense verification).
struct NamedModel {
  std::string name;
  WalkModel model;
  int torus_side;
};
std::vector<NamedModel> verification_models();

/// Relative factorization residual for one model: max over `us` of
/// |det(I - u M_A) - prod_k det(I - u M(k))| / max(|det|, 1e-30).
double factorization_residual(const WalkModel& model, int torus_side,
                              std::span<const Complex> us);

/// Fixed u sample set on the disk |u| <= radius (deterministic).
std::vector<Complex> u_samples(int count, double radius);

}  // namespace walkzeta

#endif
