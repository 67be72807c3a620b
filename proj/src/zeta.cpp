#include "walkzeta/zeta.hpp"

#include <cmath>

#include "walkzeta/closed_forms.hpp"
#include "walkzeta/errors.hpp"
#include "walkzeta/linalg.hpp"

namespace walkzeta {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_grid(int dim, int n) {
  if (dim < 1) throw InvalidArgument("grid dimension must be >= 1");
  if (n < 1) throw InvalidArgument("grid size must be >= 1");
}

void require_inside_disk(const WalkModel& model, Complex u, int n_per_axis) {
  const double rho = spectral_radius_bound(model, n_per_axis);
  if (std::abs(u) * rho >= 1.0)
    throw ConvergenceDiskError("u outside convergence disk (|u| * rho_max >= 1)");
}

}  // namespace

void for_each_grid_point(int dim, int n,
                         const std::function<void(std::span<const double>)>& fn) {
  check_grid(dim, n);
  std::vector<int> k(static_cast<std::size_t>(dim), 0);
  std::vector<double> angles(static_cast<std::size_t>(dim), 0.0);
  while (true) {
    for (std::size_t j = 0; j < angles.size(); ++j) angles[j] = kTwoPi * k[j] / n;
    fn(angles);
    int axis = dim - 1;
    while (axis >= 0) {
      if (++k[static_cast<std::size_t>(axis)] < n) break;
      k[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
}

double spectral_radius_bound(const WalkModel& model, int n_per_axis) {
  double rho = 0.0;
  if (model.num_states() == 1) {
    for_each_grid_point(model.lattice_dim, n_per_axis, [&](std::span<const double> angles) {
      rho = std::max(rho, std::abs(fourier_block(model, angles)(0, 0)));
    });
  } else {
    for_each_grid_point(model.lattice_dim, n_per_axis, [&](std::span<const double> angles) {
      rho = std::max(rho, spectral_radius(fourier_block(model, angles)));
    });
  }
  return rho;
}

Complex zeta_inv_finite(const WalkModel& model, const TorusSpec& torus, Complex u) {
  if (torus.dim != model.lattice_dim)
    throw DimensionError("zeta_inv_finite: torus dimension mismatch");
  require_inside_disk(model, u, torus.side);
  Complex log_sum(0.0, 0.0);
  for_each_grid_point(torus.dim, torus.side, [&](std::span<const double> angles) {
    const ComplexMatrix block = fourier_block(model, angles);
    ComplexMatrix f = ComplexMatrix::identity(block.rows());
    for (std::size_t i = 0; i < f.data().size(); ++i) f.data()[i] -= u * block.data()[i];
    log_sum += std::log(determinant(f));
  });
  return std::exp(log_sum / static_cast<double>(torus_sites(torus)));
}

Complex zeta_inv_limit(const WalkModel& model, Complex u, int n_quad) {
  return zeta_inv_finite(model, TorusSpec{model.lattice_dim, n_quad}, u);
}

Complex c_r_finite(const WalkModel& model, const TorusSpec& torus, int r) {
  if (torus.dim != model.lattice_dim)
    throw DimensionError("c_r_finite: torus dimension mismatch");
  return c_r_profile(model, torus.side, r).back();
}

std::vector<Complex> c_r_profile(const WalkModel& model, int n_per_axis, int r_max) {
  if (r_max < 1) throw InvalidArgument("c_r_profile: r_max must be >= 1");
  std::vector<Complex> sums(static_cast<std::size_t>(r_max), Complex(0.0, 0.0));
  std::size_t points = 0;
  for_each_grid_point(model.lattice_dim, n_per_axis, [&](std::span<const double> angles) {
    const ComplexMatrix block = fourier_block(model, angles);
    const std::vector<Complex> traces = traces_of_powers(block, r_max);
    for (std::size_t r = 0; r < sums.size(); ++r) sums[r] += traces[r];
    ++points;
  });
  for (Complex& s : sums) s /= static_cast<double>(points);
  return sums;
}

Complex c_r_limit(const WalkModel& model, int r, CrRoute route, int n_quad) {
  if (r < 1) throw InvalidArgument("c_r_limit: r must be >= 1");
  if (route == CrRoute::Quadrature) return c_r_profile(model, n_quad, r).back();
  return trace(matrix_weight_origin(model, r));
}

double series_consistency(const WalkModel& model, const TorusSpec& torus, Complex u,
                          int r_max) {
  const Complex zeta_inv = zeta_inv_finite(model, torus, u);
  const std::vector<Complex> coeffs = c_r_profile(model, torus.side, r_max);
  Complex series(0.0, 0.0);
  Complex upow(1.0, 0.0);
  for (int r = 1; r <= r_max; ++r) {
    upow *= u;
    series += coeffs[static_cast<std::size_t>(r - 1)] * upow / static_cast<double>(r);
  }
  return std::abs(-std::log(zeta_inv) - series);
}

ZetaReport zeta_report(const WalkModel& model, Complex u, int grid, bool finite_route,
                       int r_max) {
  ZetaReport report;
  report.model_id = model.family;
  if (model.family != "multistate_rw")
    report.model_id += std::string(1, '.') + shift_char(model.shift);
  report.u = u;
  report.grid = grid;
  report.route = finite_route ? "finite" : "limit";
  const TorusSpec torus{model.lattice_dim, grid};
  report.zeta_inv = zeta_inv_finite(model, torus, u);
  if (r_max > 0) report.c_r = c_r_profile(model, grid, r_max);

  if (const auto id = closed_form_for(model)) {
    Complex log_sum(0.0, 0.0);
    for_each_grid_point(model.lattice_dim, grid, [&](std::span<const double> angles) {
      log_sum += std::log(f_value(*id, angles, u));
    });
    const Complex closed =
        prefactor(*id, u) * std::exp(log_sum / static_cast<double>(torus_sites(torus)));
    report.residuals["closed_form"] = std::abs(report.zeta_inv - closed);
  }
  if (finite_route) {
    const std::size_t size = torus_sites(torus) * model.num_states();
    if (size <= kOperatorRowCap) {
      const ComplexMatrix op = full_operator(model, torus);
      ComplexMatrix f = ComplexMatrix::identity(op.rows());
      for (std::size_t i = 0; i < f.data().size(); ++i) f.data()[i] -= u * op.data()[i];
      const Complex det = determinant(f);
      // branch-free comparison: (zeta_inv)^{N^d} must reproduce the determinant
      Complex power(1.0, 0.0);
      for (std::size_t i = 0; i < torus_sites(torus); ++i) power *= report.zeta_inv;
      report.residuals["full_operator_route"] =
          std::abs(power - det) / std::max({std::abs(det), std::abs(power), 1e-30});
    }
  }
  return report;
}

}  // namespace walkzeta
