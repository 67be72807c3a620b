#include "walkzeta/verify.hpp"

#include <cmath>

#include "walkzeta/errors.hpp"
#include "walkzeta/linalg.hpp"
#include "walkzeta/operators.hpp"
#include "walkzeta/zeta.hpp"

namespace walkzeta {

namespace {

constexpr double kDetTol = 1e-9;
constexpr double kEigTol = 1e-7;
constexpr double kFactorizationTol = 1e-8;
constexpr double kKonnoSatoTol = 1e-9;

// Grover angle: cos eta = -1/3.
double grover_eta() { return std::acos(-1.0 / 3.0); }

std::vector<ClosedFormId> closed_form_catalog() {
  std::vector<ClosedFormId> ids;
  const std::vector<double> etas{0.0, 0.9, grover_eta(), 4.1};
  const std::vector<double> ps{0.5, 0.31, 0.64, 0.87};
  const std::vector<double> as{0.0, 0.3, 0.5, 1.0};
  for (Shift s : {Shift::M, Shift::F}) {
    for (double eta : etas) {
      ids.push_back(qw3_form(eta, s));
      ids.push_back(crw3_form(eta, s));
    }
    for (double p : ps) {
      ids.push_back(qw4_1d_form(p, s));
      ids.push_back(crw4_1d_form(p, s));
      ids.push_back(qw4_2d_form(p, s));
      ids.push_back(crw4_2d_form(p, s));
    }
    for (double a : as) {
      ids.push_back(gg_form(GroverLattice::OneDimThreeState, a, s));
      ids.push_back(gg_form(GroverLattice::OneDimFourState, a, s));
      ids.push_back(gg_form(GroverLattice::TwoDimFourState, a, s));
    }
  }
  ids.push_back(rw_general_form({{-1, 0.5}, {1, 0.5}}));
  ids.push_back(rw_general_form({{-2, 0.25}, {-1, 0.25}, {1, 0.25}, {2, 0.25}}));
  ids.push_back(rw_general_form({{-2, 0.1}, {-1, 0.15}, {0, 0.3}, {1, 0.05}, {2, 0.4}}));
  ids.push_back(rw_window_form(0.4, 0.1, 3));
  ids.push_back(rw_uniform_form(1));
  ids.push_back(rw_uniform_form(3));
  for (double a : as) {
    ids.push_back(gg_form(GroverLattice::TorusD, a, Shift::F, 1));
    ids.push_back(gg_form(GroverLattice::TorusD, a, Shift::F, 3));
  }
  return ids;
}

// angle samples per axis; >= 256 (angles, u, parameter) triples per family
// once combined with the u and parameter grids
int angle_points_for(const ClosedFormId& id) {
  switch (id.family) {
    case ClosedFormFamily::QW4_2D:
    case ClosedFormFamily::CRW4_2D:
    case ClosedFormFamily::GG2D:
      return 12;
    case ClosedFormFamily::GGTorus:
      return id.params.torus_dim >= 3 ? 6 : (id.params.torus_dim == 2 ? 12 : 32);
    default:
      return 32;
  }
}

std::string param_tag(const ClosedFormId& id) {
  char buf[64];
  switch (id.family) {
    case ClosedFormFamily::QW3:
    case ClosedFormFamily::CRW3:
      std::snprintf(buf, sizeof buf, "(eta=%.3f)", id.params.eta);
      break;
    case ClosedFormFamily::QW4_1D:
    case ClosedFormFamily::CRW4_1D:
    case ClosedFormFamily::QW4_2D:
    case ClosedFormFamily::CRW4_2D:
      std::snprintf(buf, sizeof buf, "(p=%.3f)", id.params.p);
      break;
    case ClosedFormFamily::GG1D3:
    case ClosedFormFamily::GG1D4:
    case ClosedFormFamily::GG2D:
    case ClosedFormFamily::GGTorus:
      std::snprintf(buf, sizeof buf, "(a=%.3f)", id.params.a);
      break;
    case ClosedFormFamily::RWWindow:
    case ClosedFormFamily::RWUniform:
      std::snprintf(buf, sizeof buf, "(L=%d)", id.params.window);
      break;
    case ClosedFormFamily::RWGeneral:
      std::snprintf(buf, sizeof buf, "(L=%d)", id.params.window);
      break;
  }
  return buf;
}

}  // namespace

std::vector<Complex> u_samples(int count, double radius) {
  // deterministic spiral through the disk, real endpoints included
  std::vector<Complex> us;
  us.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double frac = static_cast<double>(i) / count;
    const double r = radius * (0.25 + 0.75 * frac);
    if (i % 3 == 0) {
      us.emplace_back(i % 2 == 0 ? r : -r, 0.0);
    } else {
      const double phi = 2.39996322972865332 * i;  // golden angle
      us.emplace_back(r * std::cos(phi), r * std::sin(phi));
    }
  }
  return us;
}

std::vector<CheckResult> verify_suite_closed_forms() {
  std::vector<CheckResult> results;
  const std::vector<Complex> us = u_samples(8, 0.5);
  for (const ClosedFormId& id : closed_form_catalog()) {
    const int angle_points = angle_points_for(id);
    const ClosedFormCheck check = verify_closed_form(id, angle_points, us);
    results.push_back({closed_form_name(id) + param_tag(id) + " det", check.det_residual, kDetTol});
    if (check.has_eigenvalues)
      results.push_back(
          {closed_form_name(id) + param_tag(id) + " eig", check.eig_residual, kEigTol});
  }
  return results;
}

std::vector<NamedModel> verification_models() {
  std::vector<NamedModel> models;
  const double eta_g = grover_eta();
  for (Shift s : {Shift::M, Shift::F}) {
    const std::string tag = std::string(".") + shift_char(s);
    models.push_back({"three_state_qw" + tag, three_state_qw(eta_g, s), 16});
    models.push_back({"crw3" + tag, crw_from_qw(three_state_qw(0.9, s)), 16});
    models.push_back({"four_state_qw_1d" + tag, four_state_qw_1d(0.5, s), 16});
    models.push_back({"crw4_1d" + tag, crw_from_qw(four_state_qw_1d(0.31, s)), 16});
    models.push_back({"four_state_qw_2d" + tag, four_state_qw_2d(0.64, s), 4});
    models.push_back({"crw4_2d" + tag, crw_from_qw(four_state_qw_2d(0.64, s)), 4});
    models.push_back(
        {"gg_1d3" + tag, generalized_grover_coin(3, 0.5, s, GroverLattice::OneDimThreeState), 16});
    models.push_back(
        {"gg_1d4" + tag, generalized_grover_coin(4, 0.3, s, GroverLattice::OneDimFourState), 16});
    models.push_back(
        {"gg_2d" + tag, generalized_grover_coin(4, 1.0, s, GroverLattice::TwoDimFourState), 4});
  }
  models.push_back({"simple_rw", multistate_rw({{-1, 0.5}, {1, 0.5}}), 16});
  models.push_back(
      {"rw_L2", multistate_rw({{-2, 0.25}, {-1, 0.25}, {1, 0.25}, {2, 0.25}}), 16});
  models.push_back(
      {"rw_asym", multistate_rw({{-2, 0.1}, {-1, 0.15}, {0, 0.3}, {1, 0.05}, {2, 0.4}}), 16});
  models.push_back({"gg_torus3.f",
                    generalized_grover_coin(6, 0.5, Shift::F, GroverLattice::TorusD, 3), 3});
  return models;
}

double factorization_residual(const WalkModel& model, int torus_side,
                              std::span<const Complex> us) {
  const TorusSpec torus{model.lattice_dim, torus_side};
  const ComplexMatrix op = full_operator(model, torus);
  double worst = 0.0;
  for (const Complex& u : us) {
    ComplexMatrix f = ComplexMatrix::identity(op.rows());
    for (std::size_t i = 0; i < f.data().size(); ++i) f.data()[i] -= u * op.data()[i];
    const Complex dense = determinant(f);
    Complex product(1.0, 0.0);
    for_each_grid_point(torus.dim, torus.side, [&](std::span<const double> angles) {
      const ComplexMatrix block = fourier_block(model, angles);
      ComplexMatrix g = ComplexMatrix::identity(block.rows());
      for (std::size_t i = 0; i < g.data().size(); ++i) g.data()[i] -= u * block.data()[i];
      product *= determinant(g);
    });
    worst = std::max(worst,
                     std::abs(dense - product) / std::max({std::abs(dense), std::abs(product), 1e-30}));
  }
  return worst;
}

std::vector<CheckResult> verify_suite_factorization() {
  std::vector<CheckResult> results;
  const std::vector<Complex> us = u_samples(10, 0.5);
  for (const NamedModel& nm : verification_models())
    results.push_back({"factorization " + nm.name + " N=" + std::to_string(nm.torus_side),
                       factorization_residual(nm.model, nm.torus_side, us), kFactorizationTol});
  return results;
}

std::vector<CheckResult> verify_suite_konno_sato() {
  std::vector<CheckResult> results;
  const std::vector<double> a_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<Complex> us = u_samples(10, 0.4);
  const std::vector<RegularGraph> graphs{build_cycle(5), build_complete(4), build_petersen(),
                                         build_hypercube(3), build_torus_graph(2, 4)};
  for (const RegularGraph& g : graphs)
    results.push_back(
        {"konno_sato " + g.name(), verify_konno_sato(g, a_grid, us), kKonnoSatoTol});

  // 2-regular graphs: lhs does not depend on a
  {
    const RegularGraph cycle = build_cycle(5);
    double worst = 0.0;
    for (const Complex& u : us) {
      const Complex base = konno_sato_lhs(cycle, 0.0, u);
      for (const double a : a_grid)
        worst = std::max(worst, std::abs(konno_sato_lhs(cycle, a, u) - base));
    }
    results.push_back({"konno_sato cycle(5) a-independence", worst, 1e-12});
  }

  // d-torus cross-check: arc determinant route vs closed-form walk route
  {
    const RegularGraph torus = build_torus_graph(2, 4);
    const std::size_t sites = 16;
    double worst = 0.0;
    for (const double a : {0.0, 0.5, 1.0}) {
      const ClosedFormId id = gg_form(GroverLattice::TorusD, a, Shift::F, 2);
      for (const Complex& u : us) {
        Complex log_sum(0.0, 0.0);
        for_each_grid_point(2, 4, [&](std::span<const double> angles) {
          log_sum += std::log(f_value(id, angles, u));
        });
        const Complex walk_route =
            prefactor(id, u) * std::exp(log_sum / static_cast<double>(sites));
        // branch-free: compare the route raised to N^d against the determinant
        Complex power(1.0, 0.0);
        for (std::size_t i = 0; i < sites; ++i) power *= walk_route;
        const Complex arc_route = konno_sato_lhs(torus, a, u);
        worst = std::max(worst, std::abs(power - arc_route) /
                                    std::max({std::abs(arc_route), std::abs(power), 1e-30}));
      }
    }
    results.push_back({"konno_sato torus(2,4) walk/arc cross-route", worst, 1e-8});
  }
  return results;
}

}  // namespace walkzeta
