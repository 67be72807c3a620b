#include <cmath>
#include <doctest.h>
#include <numbers>

#include "test_util.hpp"
#include "walkzeta/closed_forms.hpp"
#include "walkzeta/errors.hpp"
#include "walkzeta/linalg.hpp"
#include "walkzeta/operators.hpp"
#include "walkzeta/verify.hpp"
#include "walkzeta/zeta.hpp"

using namespace walkzeta;
using wztest::multiset_match_distance;

namespace {

const double kGroverEta = std::acos(-1.0 / 3.0);
const double kPi = std::numbers::pi;

// (D+1)-th forward difference of F in u; vanishes exactly when F is a
// polynomial of degree <= D
Complex forward_difference(const ClosedFormId& id, std::span<const double> angles, int order,
                           double h) {
  Complex acc(0.0, 0.0);
  double binom = 1.0;
  for (int j = 0; j <= order; ++j) {
    const double sign = (order - j) % 2 == 0 ? 1.0 : -1.0;
    acc += sign * binom * f_value(id, angles, Complex(j * h, 0.0));
    binom *= static_cast<double>(order - j) / (j + 1);
  }
  return acc;
}

int prefactor_degree(const ClosedFormId& id) {
  // degree of the leading factor as a polynomial in u
  const Complex at0 = prefactor(id, Complex(0.0, 0.0));
  CHECK(std::abs(at0 - 1.0) < 1e-15);
  for (int deg = 0; deg <= 8; ++deg) {
    Complex acc(0.0, 0.0);
    double binom = 1.0;
    for (int j = 0; j <= deg + 1; ++j) {
      const double sign = (deg + 1 - j) % 2 == 0 ? 1.0 : -1.0;
      acc += sign * binom * prefactor(id, Complex(0.37 * j, 0.0));
      binom *= static_cast<double>(deg + 1 - j) / (j + 1);
    }
    if (std::abs(acc) < 1e-9) return deg;
  }
  return -1;
}

}  // namespace

TEST_SUITE("closed_forms") {

TEST_CASE("prefactor values from the propositions") {
  CHECK(std::abs(prefactor(qw3_form(1.0, Shift::F), Complex(0.4, 0.0)) - 1.4) < 1e-15);
  CHECK(std::abs(prefactor(qw3_form(1.0, Shift::M), Complex(0.4, 0.0)) - 0.6) < 1e-15);
  CHECK(std::abs(prefactor(qw4_1d_form(0.3, Shift::M), Complex(0.9, 0.0)) - 1.0) < 1e-15);
  CHECK(std::abs(prefactor(gg_form(GroverLattice::TorusD, 0.5, Shift::F, 3),
                           Complex(0.5, 0.0)) -
                 0.5625) < 1e-15);
  CHECK(std::abs(prefactor(crw4_1d_form(0.8, Shift::F), Complex(0.5, 0.0)) -
                 (1.0 + 4.0 * 0.09 * 0.25)) < 1e-15);
}

TEST_CASE("Grover three-state F-type F at theta = 0 is 1 - 2u + u^2") {
  for (const Complex u : {Complex(0.3, 0.0), Complex(-0.1, 0.2)}) {
    const Complex f = f_value(qw3_form(kGroverEta, Shift::F), std::vector<double>{0.0}, u);
    CHECK(std::abs(f - (1.0 - 2.0 * u + u * u)) < 1e-14);
  }
}

TEST_CASE("two-dimensional generalized Grover F at the endpoints of a") {
  const std::vector<double> angles{0.7, 2.1};
  const double cc = std::cos(angles[0]) + std::cos(angles[1]);
  for (const Complex u : {Complex(0.2, 0.0), Complex(-0.3, 0.1)}) {
    CHECK(std::abs(f_value(gg_form(GroverLattice::TwoDimFourState, 1.0, Shift::F), angles, u) -
                   (1.0 - cc * u + u * u)) < 1e-14);
    CHECK(std::abs(f_value(gg_form(GroverLattice::TwoDimFourState, 0.0, Shift::F), angles, u) -
                   (1.0 - 2.0 * cc * u + 3.0 * u * u)) < 1e-14);
  }
}

TEST_CASE("uniform walk: guarded ratio equals the direct sum") {
  const ClosedFormId id = rw_uniform_form(1);
  const Complex u(0.5, 0.0);
  // theta = pi: symbol (1 + 2 cos pi)/3 = -1/3, so F = 1 + u/3
  CHECK(std::abs(f_value(id, std::vector<double>{kPi}, u) - (1.0 + u / 3.0)) < 1e-13);
  // the removable singularity at theta = 0: symbol is exactly 1
  CHECK(std::abs(f_value(id, std::vector<double>{0.0}, u) - (1.0 - u)) < 1e-13);
  // near-zero angles stay on the direct-sum branch without blowup
  CHECK(std::abs(f_value(id, std::vector<double>{1e-9}, u) - (1.0 - u)) < 1e-10);
  // general angle: ratio form vs direct sum
  for (double theta : {0.3, 1.0, 2.5}) {
    const ClosedFormId window = rw_window_form(1.0 / 3.0, 1.0 / 3.0, 1);
    CHECK(std::abs(f_value(id, std::vector<double>{theta}, u) -
                   f_value(window, std::vector<double>{theta}, u)) < 1e-12);
  }
}

TEST_CASE("wrong angle count throws") {
  CHECK_THROWS_AS(f_value(qw3_form(1.0, Shift::M), std::vector<double>{0.1, 0.2},
                          Complex(0.1, 0.0)),
                  DimensionError);
  CHECK_THROWS_AS(
      closed_eigenvalues(qw4_2d_form(0.5, Shift::F), std::vector<double>{0.1}),
      DimensionError);
}

TEST_CASE("closed eigenvalues: Grover three-state at zero momentum") {
  const auto lambdas =
      closed_eigenvalues(qw3_form(kGroverEta, Shift::F), std::vector<double>{0.0});
  CHECK(multiset_match_distance(
            lambdas, {Complex(-1.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0)}) < 1e-14);
}

TEST_CASE("closed eigenvalues: four-state F-type where the cosines cancel") {
  // cos t + cos 2t = 0 at t = pi/3, so the list collapses to 1,-1,i,-i
  const auto lambdas =
      closed_eigenvalues(qw4_1d_form(0.5, Shift::F), std::vector<double>{kPi / 3.0});
  CHECK(multiset_match_distance(lambdas,
                                {Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(0.0, 1.0),
                                 Complex(0.0, -1.0)}) < 1e-14);
}

TEST_CASE("closed eigenvalues: degenerate correlated 2d walk at p = 1/2") {
  const std::vector<double> angles{0.9, 1.7};
  const auto lambdas = closed_eigenvalues(crw4_2d_form(0.5, Shift::F), angles);
  const double beta = 0.25 * (std::cos(angles[0]) + std::cos(angles[1]));
  CHECK(multiset_match_distance(lambdas, {Complex(0.0, 0.0), Complex(0.0, 0.0),
                                          Complex(2.0 * beta, 0.0), Complex(0.0, 0.0)}) <
        1e-14);
}

TEST_CASE("families without a tabulated eigenvalue list refuse") {
  CHECK_THROWS_AS(closed_eigenvalues(crw3_form(1.0, Shift::M), std::vector<double>{0.3}),
                  NoClosedFormError);
  CHECK_THROWS_AS(closed_eigenvalues(qw4_1d_form(0.5, Shift::M), std::vector<double>{0.3}),
                  NoClosedFormError);
  CHECK_THROWS_AS(
      closed_eigenvalues(gg_form(GroverLattice::OneDimThreeState, 0.5, Shift::F),
                         std::vector<double>{0.3}),
      NoClosedFormError);
}

TEST_CASE("tabulated eigenvalue lists reproduce prefactor * F as a polynomial") {
  const std::vector<ClosedFormId> ids{
      qw3_form(0.8, Shift::M),      qw3_form(2.3, Shift::F),   qw4_1d_form(0.31, Shift::F),
      crw4_1d_form(0.72, Shift::F), qw4_2d_form(0.4, Shift::M), qw4_2d_form(0.4, Shift::F),
      crw4_2d_form(0.64, Shift::M), crw4_2d_form(0.64, Shift::F)};
  for (const ClosedFormId& id : ids) {
    const int dim = id.family == ClosedFormFamily::QW4_2D ||
                            id.family == ClosedFormFamily::CRW4_2D
                        ? 2
                        : 1;
    for_each_grid_point(dim, 9, [&](std::span<const double> angles) {
      const std::vector<Complex> lambdas = closed_eigenvalues(id, angles);
      for (const Complex u : {Complex(0.3, 0.0), Complex(-0.2, 0.15)}) {
        Complex product(1.0, 0.0);
        for (const Complex& lambda : lambdas) product *= 1.0 - u * lambda;
        CHECK(std::abs(product - prefactor(id, u) * f_value(id, angles, u)) < 1e-9);
      }
    });
  }
}

TEST_CASE("random walk closed limit") {
  CHECK(rw_limit_zeta_closed(0.0) == 1.0);
  CHECK(std::abs(rw_limit_zeta_closed(0.6) - 0.9) < 1e-15);
  CHECK(std::abs(rw_limit_zeta_closed(0.8) - 0.8) < 1e-15);
  CHECK(std::abs(rw_limit_zeta_closed(-0.6) - 0.9) < 1e-15);
  CHECK_THROWS_AS(rw_limit_zeta_closed(1.0), InvalidArgument);
}

TEST_CASE("log series lemma: basic values") {
  CHECK(log_series_lemma(0.0, 50) == 0.0);
  CHECK(std::abs(log_series_lemma(0.3, 1) + 0.3 * 0.3 / 4.0) < 1e-16);
  CHECK(std::abs(log_series_lemma(0.5, 60) - std::log((1.0 + std::sqrt(0.75)) / 2.0)) <
        1e-12);
}

TEST_CASE("log series lemma: partial sums decrease to the closed value") {
  const double x = 0.7;
  const double target = std::log(rw_limit_zeta_closed(x));
  double prev = 0.0;
  for (int n : {5, 10, 20, 40, 80}) {
    const double sum = log_series_lemma(x, n);
    CHECK(sum < prev);  // all terms are negative
    prev = sum;
  }
  CHECK(std::abs(log_series_lemma(x, 200) - target) < 1e-14);
}

TEST_CASE("determinant identity over grids for representative families") {
  const std::vector<Complex> us = u_samples(8, 0.5);
  const std::vector<ClosedFormId> ids{
      qw3_form(0.0, Shift::M),
      qw3_form(kGroverEta, Shift::F),
      crw3_form(1.2, Shift::M),
      qw4_1d_form(0.31, Shift::M),
      crw4_1d_form(0.77, Shift::F),
      qw4_2d_form(0.5, Shift::F),
      crw4_2d_form(0.25, Shift::M),
      gg_form(GroverLattice::OneDimThreeState, 0.6, Shift::F),
      gg_form(GroverLattice::OneDimFourState, 0.0, Shift::M),
      gg_form(GroverLattice::TwoDimFourState, 0.3, Shift::M),
      gg_form(GroverLattice::TwoDimFourState, 1.0, Shift::F),
      gg_form(GroverLattice::TorusD, 0.5, Shift::F, 3),
      rw_window_form(0.4, 0.1, 3),
      rw_uniform_form(2),
  };
  for (const ClosedFormId& id : ids) {
    CAPTURE(closed_form_name(id));
    const int points = id.family == ClosedFormFamily::GGTorus ? 8 : 16;
    const ClosedFormCheck check = verify_closed_form(id, points, us);
    CHECK(check.det_residual < 1e-9);
    if (check.has_eigenvalues) CHECK(check.eig_residual < 1e-7);
  }
}

TEST_CASE("random-weight walks verify to near machine precision") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  const std::vector<Complex> us = u_samples(6, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    std::map<int, double> weights;
    double total = 0.0;
    for (int x = -3; x <= 3; ++x) total += (weights[x] = dist(rng));
    for (auto& [x, w] : weights) w /= total;
    // rounding: renormalize the stay weight so the sum is exactly 1
    double sum = 0.0;
    for (const auto& [x, w] : weights) sum += w;
    weights[0] += 1.0 - sum;
    const ClosedFormCheck check = verify_closed_form(rw_general_form(weights), 32, us);
    CHECK(check.det_residual < 1e-11);
  }
}

TEST_CASE("F has constant term one and the complementary degree") {
  const std::vector<std::pair<ClosedFormId, int>> cases{
      {qw3_form(1.1, Shift::M), 3},                                   // d_c 3, prefactor deg 1
      {qw3_form(1.1, Shift::F), 3},
      {crw3_form(0.7, Shift::F), 3},                                  // no prefactor
      {qw4_1d_form(0.31, Shift::M), 4},
      {qw4_1d_form(0.31, Shift::F), 4},
      {crw4_1d_form(0.8, Shift::F), 4},
      {qw4_2d_form(0.45, Shift::M), 4},
      {crw4_2d_form(0.45, Shift::F), 4},
      {gg_form(GroverLattice::OneDimThreeState, 0.5, Shift::F), 3},
      {gg_form(GroverLattice::OneDimFourState, 0.5, Shift::M), 4},
      {gg_form(GroverLattice::TwoDimFourState, 0.5, Shift::F), 4},
      {gg_form(GroverLattice::TorusD, 0.5, Shift::F, 3), 6},          // d_c = 2d
  };
  const std::vector<double> angles1{0.873};
  const std::vector<double> angles2{0.873, 1.991};
  const std::vector<double> angles3{0.873, 1.991, 0.412};
  for (const auto& [id, dc] : cases) {
    CAPTURE(closed_form_name(id));
    std::span<const double> angles =
        id.family == ClosedFormFamily::GGTorus
            ? std::span<const double>(angles3)
            : (id.family == ClosedFormFamily::QW4_2D || id.family == ClosedFormFamily::CRW4_2D ||
                       id.family == ClosedFormFamily::GG2D
                   ? std::span<const double>(angles2)
                   : std::span<const double>(angles1));
    // constant term 1
    CHECK(std::abs(f_value(id, angles, Complex(0.0, 0.0)) - 1.0) < 1e-14);
    const int expected_degree = dc - prefactor_degree(id);
    // the (D+1)-th difference vanishes, the D-th does not
    CHECK(std::abs(forward_difference(id, angles, expected_degree + 1, 0.4)) < 1e-10);
    CHECK(std::abs(forward_difference(id, angles, expected_degree, 0.4)) > 1e-6);
  }
}

TEST_CASE("closed_form_for maps models back to their families") {
  CHECK(closed_form_for(three_state_qw(1.0, Shift::M))->family == ClosedFormFamily::QW3);
  CHECK(closed_form_for(crw_from_qw(four_state_qw_2d(0.4, Shift::F)))->family ==
        ClosedFormFamily::CRW4_2D);
  CHECK(closed_form_for(multistate_rw({{-1, 0.5}, {1, 0.5}}))->family ==
        ClosedFormFamily::RWGeneral);
  CHECK(closed_form_for(generalized_grover_coin(6, 0.2, Shift::F, GroverLattice::TorusD, 3))
            ->family == ClosedFormFamily::GGTorus);
  // the M-type torus walk has no printed form for d = 3
  CHECK_FALSE(
      closed_form_for(generalized_grover_coin(6, 0.2, Shift::M, GroverLattice::TorusD, 3))
          .has_value());
}

TEST_CASE("make_model round-trips the closed-form id") {
  const ClosedFormId id = crw4_1d_form(0.64, Shift::F);
  const WalkModel model = make_model(id);
  const auto back = closed_form_for(model);
  REQUIRE(back.has_value());
  CHECK(back->family == id.family);
  CHECK(back->shift == id.shift);
  CHECK(back->params.p == id.params.p);
}

}  // TEST_SUITE
