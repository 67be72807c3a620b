// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Tolerances and runtime budgets are pinned in code next to each check.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "walkzeta/closed_forms.hpp"
#include "walkzeta/graph_zeta.hpp"
#include "walkzeta/linalg.hpp"
#include "walkzeta/operators.hpp"
#include "walkzeta/verify.hpp"
#include "walkzeta/zeta.hpp"

using namespace walkzeta;

namespace {

const double kGroverEta = std::acos(-1.0 / 3.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

double total_measure(const StateField& state, int p) {
  double total = 0.0;
  for (double m : measure(state, p)) total += m;
  return total;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// 1. det(I - u M_A) equals the Fourier-grid product for all tabulated models,
//    relative error < 1e-8, d_c N^d <= 256, 10 u samples with |u| <= 0.5.
Outcome criterion_factorization() {
  const std::vector<Complex> us = u_samples(10, 0.5);
  double worst = 0.0;
  std::string worst_name;
  for (const NamedModel& nm : verification_models()) {
    const double residual = factorization_residual(nm.model, nm.torus_side, us);
    if (residual > worst) {
      worst = residual;
      worst_name = nm.name;
    }
  }
  return {worst < 1e-8, "max rel residual " + sci(worst) + " (" + worst_name + "), tol 1e-8"};
}

// 2. det(I - u M(angles)) = prefactor * F within 1e-9 over >= 256
//    (angles, u, parameter) triples per family.
Outcome criterion_propositions() {
  double worst = 0.0;
  std::string worst_name;
  bool pass = true;
  for (const CheckResult& r : verify_suite_closed_forms()) {
    if (r.name.find(" det") == std::string::npos) continue;  // det identity rows
    if (r.residual > worst) {
      worst = r.residual;
      worst_name = r.name;
    }
    pass = pass && r.residual < 1e-9;
  }
  return {pass, "max |det - pf*F| " + sci(worst) + " (" + worst_name + "), tol 1e-9"};
}

// 3. zeta_inv_limit(simple RW, u, 4096) = (1 + sqrt(1-u^2))/2 within 1e-9.
Outcome criterion_rw_closed_form() {
  const WalkModel rw = multistate_rw({{-1, 0.5}, {1, 0.5}});
  double worst = 0.0;
  for (double u : {0.2, -0.2, 0.6, -0.6, 0.9, -0.9}) {
    const Complex value = zeta_inv_limit(rw, Complex(u, 0.0), 4096);
    worst = std::max(worst, std::abs(value - rw_limit_zeta_closed(u)));
  }
  return {worst < 1e-9, "max |quadrature - closed| " + sci(worst) + ", tol 1e-9"};
}

// 4. Lemma partial sums match log((1+sqrt(1-x^2))/2) within 1e-12
//    (60 terms at x = 0.1, 0.5; more terms as needed at x = 0.9).
Outcome criterion_lemma_series() {
  double worst = 0.0;
  for (const auto& [x, terms] : std::vector<std::pair<double, int>>{
           {0.1, 60}, {0.5, 60}, {0.9, 400}}) {
    const double target = std::log((1.0 + std::sqrt(1.0 - x * x)) / 2.0);
    worst = std::max(worst, std::abs(log_series_lemma(x, terms) - target));
  }
  return {worst < 1e-12, "max |partial sum - log closed form| " + sci(worst) + ", tol 1e-12"};
}

// 5. |C_r(quadrature, 512/axis) - Tr(Phi_r(0))| < 1e-8 for r <= 12.
Outcome criterion_cr_routes() {
  const std::vector<std::pair<std::string, WalkModel>> models{
      {"simple RW", multistate_rw({{-1, 0.5}, {1, 0.5}})},
      {"3-state Grover M", three_state_qw(kGroverEta, Shift::M)},
      {"3-state Grover F", three_state_qw(kGroverEta, Shift::F)},
      {"4-state 1D Grover F", four_state_qw_1d(0.5, Shift::F)},
      {"2D Grover F", four_state_qw_2d(0.5, Shift::F)},
  };
  double worst = 0.0;
  std::string worst_name;
  for (const auto& [name, model] : models) {
    const std::vector<Complex> quad = c_r_profile(model, 512, 12);
    for (int r = 1; r <= 12; ++r) {
      const Complex weight = trace(matrix_weight_origin(model, r));
      const double diff = std::abs(quad[std::size_t(r - 1)] - weight);
      if (diff > worst) {
        worst = diff;
        worst_name = name + " r=" + std::to_string(r);
      }
    }
  }
  return {worst < 1e-8, "max route difference " + sci(worst) + " (" + worst_name + "), tol 1e-8"};
}

// 6. Generalized Konno-Sato relative residual < 1e-9 on the graph family, a in
//    {0, 0.25, 0.5, 0.75, 1}, 10 u points with |u| <= 0.4; exact
//    a-independence (< 1e-12) on cycle(5).
Outcome criterion_konno_sato() {
  const std::vector<double> a_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<Complex> us = u_samples(10, 0.4);
  double worst = 0.0;
  std::string worst_name;
  for (const RegularGraph& g : {build_cycle(5), build_complete(4), build_petersen(),
                                build_hypercube(3), build_torus_graph(2, 4)}) {
    const double residual = verify_konno_sato(g, a_grid, us);
    if (residual > worst) {
      worst = residual;
      worst_name = g.name();
    }
  }
  bool pass = worst < 1e-9;

  const RegularGraph cycle = build_cycle(5);
  double drift = 0.0;
  for (const Complex& u : us) {
    const Complex base = konno_sato_lhs(cycle, 0.0, u);
    for (double a : a_grid) drift = std::max(drift, std::abs(konno_sato_lhs(cycle, a, u) - base));
  }
  pass = pass && drift < 1e-12;
  return {pass, "max rel residual " + sci(worst) + " (" + worst_name +
                    "), tol 1e-9; cycle(5) a-drift " + sci(drift) + ", tol 1e-12"};
}

// 7. torus(2,4): arc-determinant route vs (1-u^2)^{d-1} exp-mean log F^{(f)}
//    within relative 1e-8 for a in {0, 0.5, 1}.
Outcome criterion_torus_cross_route() {
  const RegularGraph g = build_torus_graph(2, 4);
  const std::size_t sites = 16;
  const std::vector<Complex> us = u_samples(10, 0.4);
  double worst = 0.0;
  for (double a : {0.0, 0.5, 1.0}) {
    const ClosedFormId id = gg_form(GroverLattice::TorusD, a, Shift::F, 2);
    for (const Complex& u : us) {
      Complex log_sum(0.0, 0.0);
      for_each_grid_point(2, 4, [&](std::span<const double> angles) {
        log_sum += std::log(f_value(id, angles, u));
      });
      const Complex walk_route =
          prefactor(id, u) * std::exp(log_sum / static_cast<double>(sites));
      Complex power(1.0, 0.0);
      for (std::size_t i = 0; i < sites; ++i) power *= walk_route;
      const Complex arc_route = konno_sato_lhs(g, a, u);
      worst = std::max(worst, std::abs(power - arc_route) /
                                  std::max({std::abs(arc_route), std::abs(power), 1e-30}));
    }
  }
  return {worst < 1e-8, "max rel route difference " + sci(worst) + ", tol 1e-8"};
}

// 8. QW models conserve the p = 2 measure and CRW models the p = 1 measure
//    within 1e-10 over 50 steps on T^1_32 / T^2_8.
Outcome criterion_conservation() {
  struct Case {
    std::string name;
    WalkModel model;
    TorusSpec torus;
    int p;
  };
  const std::vector<Case> cases{
      {"3-state Grover QW", three_state_qw(kGroverEta, Shift::M), {1, 32}, 2},
      {"4-state 1D Grover QW", four_state_qw_1d(0.5, Shift::F), {1, 32}, 2},
      {"3-state CRW", crw_from_qw(three_state_qw(0.9, Shift::F)), {1, 32}, 1},
      {"4-state 1D CRW", crw_from_qw(four_state_qw_1d(0.31, Shift::M)), {1, 32}, 1},
      {"2D Grover QW", four_state_qw_2d(0.5, Shift::F), {2, 8}, 2},
      {"2D CRW", crw_from_qw(four_state_qw_2d(0.64, Shift::F)), {2, 8}, 1},
  };
  double worst = 0.0;
  std::string worst_name;
  for (const Case& c : cases) {
    const std::size_t dc = c.model.num_states();
    std::vector<Complex> chirality(dc);
    const double amp = c.p == 1 ? 1.0 / dc : 1.0 / std::sqrt(static_cast<double>(dc));
    for (Complex& z : chirality) z = amp;
    StateField state = StateField::delta_at_origin(c.torus, chirality);
    const double initial = total_measure(state, c.p);
    for (int n = 1; n <= 50; ++n) {
      state = evolve_step(c.model, state);
      const double drift = std::abs(total_measure(state, c.p) - initial);
      if (drift > worst) {
        worst = drift;
        worst_name = c.name + " n=" + std::to_string(n);
      }
    }
  }
  return {worst < 1e-10, "max measure drift " + sci(worst) + " (" + worst_name + "), tol 1e-10"};
}

// 9. U(a) is unitary iff a = 1 for d_c in {3, 4, 6} (a in {0, 0.5, 1}) and
//    for every a when d_c = 2.
Outcome criterion_classification() {
  bool pass = true;
  std::string detail = "unitarity pattern: ";
  for (int dc : {2, 3, 4, 6}) {
    for (double a : {0.0, 0.5, 1.0}) {
      const ComplexMatrix u = generalized_grover_matrix(dc, a);
      const bool unitary =
          max_abs_diff(conjugate_transpose(u) * u, ComplexMatrix::identity(u.rows())) < 1e-10;
      const bool expected = dc == 2 || a == 1.0;
      if (unitary != expected) {
        pass = false;
        detail += "d_c=" + std::to_string(dc) + ",a=" + sci(a) + " wrong; ";
      }
    }
  }
  if (pass) detail += "matches \"unitary iff a = 1\" for d_c in {3,4,6}, always for d_c = 2";
  return {pass, detail};
}

}  // namespace

int main() {
  struct Entry {
    int number;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria{
      {1, "determinant factorization over the Fourier grid", 10.0, criterion_factorization},
      {2, "proposition suite: det(I - u M) = prefactor * F", 30.0, criterion_propositions},
      {3, "random-walk closed form (1 + sqrt(1 - u^2))/2", 5.0, criterion_rw_closed_form},
      {4, "log series lemma partial sums", 5.0, criterion_lemma_series},
      {5, "C_r route agreement: quadrature vs return weight", 60.0, criterion_cr_routes},
      {6, "generalized Konno-Sato identity", 30.0, criterion_konno_sato},
      {7, "d-torus walk/arc zeta cross-route agreement", 30.0, criterion_torus_cross_route},
      {8, "measure conservation over 50 steps", 30.0, criterion_conservation},
      {9, "generalized Grover unitarity classification", 5.0, criterion_classification},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < entry.budget_seconds;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s — %s [%.2f s / %.0f s]\n", pass ? "PASS" : "FAIL",
                entry.number, entry.title.c_str(), outcome.detail.c_str(), seconds,
                entry.budget_seconds);
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
