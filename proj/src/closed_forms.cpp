#include "walkzeta/closed_forms.hpp"

#include <cmath>

#include "walkzeta/errors.hpp"
#include "walkzeta/linalg.hpp"
#include "walkzeta/operators.hpp"
#include "walkzeta/zeta.hpp"

namespace walkzeta {

namespace {

// (-1)^{delta(s)} with delta(m) = 1, delta(f) = 0.
double delta_sign(Shift s) { return s == Shift::M ? -1.0 : 1.0; }

double clamped_sqrt(double x) { return std::sqrt(x < 0.0 ? 0.0 : x); }

int lattice_dim_of(const ClosedFormId& id) {
  switch (id.family) {
    case ClosedFormFamily::QW4_2D:
    case ClosedFormFamily::CRW4_2D:
    case ClosedFormFamily::GG2D:
      return 2;
    case ClosedFormFamily::GGTorus:
      return id.params.torus_dim;
    default:
      return 1;
  }
}

void check_angles(const ClosedFormId& id, std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != lattice_dim_of(id))
    throw DimensionError("closed form: wrong angle count for " + closed_form_name(id));
}

// Dirichlet-window mean sum_x p_x e^{-ix theta} for the uniform walk; the
// closed ratio has a removable singularity at cos theta = 1, where the
// direct sum takes over.
double uniform_symbol(int window, double theta) {
  const double c = std::cos(theta);
  const double share = 1.0 / (2.0 * window + 1.0);
  if (std::abs(c - 1.0) < 1e-6) {
    double sum = 1.0;
    for (int l = 1; l <= window; ++l) sum += 2.0 * std::cos(l * theta);
    return share * sum;
  }
  return share * (std::cos((window + 1.0) * theta) - std::cos(window * theta)) / (c - 1.0);
}

}  // namespace

std::string closed_form_name(const ClosedFormId& id) {
  switch (id.family) {
    case ClosedFormFamily::QW3:
      return std::string("QW3.") + shift_char(id.shift);
    case ClosedFormFamily::CRW3:
      return std::string("CRW3.") + shift_char(id.shift);
    case ClosedFormFamily::QW4_1D:
      return std::string("QW4-1D.") + shift_char(id.shift);
    case ClosedFormFamily::CRW4_1D:
      return std::string("CRW4-1D.") + shift_char(id.shift);
    case ClosedFormFamily::RWGeneral:
      return "RW-general";
    case ClosedFormFamily::RWWindow:
      return "RW-window";
    case ClosedFormFamily::RWUniform:
      return "RW-uniform";
    case ClosedFormFamily::QW4_2D:
      return std::string("QW4-2D.") + shift_char(id.shift);
    case ClosedFormFamily::CRW4_2D:
      return std::string("CRW4-2D.") + shift_char(id.shift);
    case ClosedFormFamily::GG1D3:
      return std::string("GG-1D3.") + shift_char(id.shift);
    case ClosedFormFamily::GG1D4:
      return std::string("GG-1D4.") + shift_char(id.shift);
    case ClosedFormFamily::GG2D:
      return std::string("GG-2D.") + shift_char(id.shift);
    case ClosedFormFamily::GGTorus:
      return "GG-torus-" + std::to_string(id.params.torus_dim);
  }
  return "?";
}

ClosedFormId qw3_form(double eta, Shift shift) {
  ClosedFormId id{ClosedFormFamily::QW3, shift, {}};
  id.params.eta = eta;
  return id;
}

ClosedFormId crw3_form(double eta, Shift shift) {
  ClosedFormId id = qw3_form(eta, shift);
  id.family = ClosedFormFamily::CRW3;
  return id;
}

ClosedFormId qw4_1d_form(double p, Shift shift) {
  ClosedFormId id{ClosedFormFamily::QW4_1D, shift, {}};
  id.params.p = p;
  return id;
}

ClosedFormId crw4_1d_form(double p, Shift shift) {
  ClosedFormId id = qw4_1d_form(p, shift);
  id.family = ClosedFormFamily::CRW4_1D;
  return id;
}

ClosedFormId qw4_2d_form(double p, Shift shift) {
  ClosedFormId id{ClosedFormFamily::QW4_2D, shift, {}};
  id.params.p = p;
  return id;
}

ClosedFormId crw4_2d_form(double p, Shift shift) {
  ClosedFormId id = qw4_2d_form(p, shift);
  id.family = ClosedFormFamily::CRW4_2D;
  return id;
}

ClosedFormId rw_general_form(const std::map<int, double>& weights) {
  ClosedFormId id{ClosedFormFamily::RWGeneral, Shift::M, {}};
  id.params.weights = weights;
  for (const auto& [x, px] : weights)
    id.params.window = std::max(id.params.window, std::abs(x));
  return id;
}

ClosedFormId rw_window_form(double p0, double pstar, int window) {
  if (window < 1) throw InvalidArgument("rw_window_form: window must be >= 1");
  if (std::abs(p0 + 2.0 * window * pstar - 1.0) > 1e-12)
    throw InvalidArgument("rw_window_form: p0 + 2L p* must equal 1");
  ClosedFormId id{ClosedFormFamily::RWWindow, Shift::M, {}};
  id.params.rw_p0 = p0;
  id.params.rw_pstar = pstar;
  id.params.window = window;
  return id;
}

ClosedFormId rw_uniform_form(int window) {
  if (window < 1) throw InvalidArgument("rw_uniform_form: window must be >= 1");
  ClosedFormId id{ClosedFormFamily::RWUniform, Shift::M, {}};
  id.params.window = window;
  const double share = 1.0 / (2.0 * window + 1.0);
  id.params.rw_p0 = share;
  id.params.rw_pstar = share;
  return id;
}

ClosedFormId gg_form(GroverLattice lattice, double a, Shift shift, int torus_dim) {
  ClosedFormId id{ClosedFormFamily::GG1D3, shift, {}};
  id.params.a = a;
  switch (lattice) {
    case GroverLattice::OneDimThreeState:
      id.family = ClosedFormFamily::GG1D3;
      break;
    case GroverLattice::OneDimFourState:
      id.family = ClosedFormFamily::GG1D4;
      break;
    case GroverLattice::TwoDimFourState:
      id.family = ClosedFormFamily::GG2D;
      break;
    case GroverLattice::TorusD:
      if (shift != Shift::F)
        throw NoClosedFormError("GG-torus-d closed form is printed for the F-type only");
      id.family = ClosedFormFamily::GGTorus;
      id.shift = Shift::F;
      id.params.torus_dim = torus_dim;
      break;
  }
  return id;
}

WalkModel make_model(const ClosedFormId& id) {
  const ModelParams& pr = id.params;
  switch (id.family) {
    case ClosedFormFamily::QW3:
      return three_state_qw(pr.eta, id.shift);
    case ClosedFormFamily::CRW3:
      return crw_from_qw(three_state_qw(pr.eta, id.shift));
    case ClosedFormFamily::QW4_1D:
      return four_state_qw_1d(pr.p, id.shift);
    case ClosedFormFamily::CRW4_1D:
      return crw_from_qw(four_state_qw_1d(pr.p, id.shift));
    case ClosedFormFamily::QW4_2D:
      return four_state_qw_2d(pr.p, id.shift);
    case ClosedFormFamily::CRW4_2D:
      return crw_from_qw(four_state_qw_2d(pr.p, id.shift));
    case ClosedFormFamily::RWGeneral:
      return multistate_rw(pr.weights);
    case ClosedFormFamily::RWWindow:
    case ClosedFormFamily::RWUniform: {
      std::map<int, double> weights;
      for (int x = -pr.window; x <= pr.window; ++x)
        weights[x] = x == 0 ? pr.rw_p0 : pr.rw_pstar;
      return multistate_rw(weights);
    }
    case ClosedFormFamily::GG1D3:
      return generalized_grover_coin(3, pr.a, id.shift, GroverLattice::OneDimThreeState);
    case ClosedFormFamily::GG1D4:
      return generalized_grover_coin(4, pr.a, id.shift, GroverLattice::OneDimFourState);
    case ClosedFormFamily::GG2D:
      return generalized_grover_coin(4, pr.a, id.shift, GroverLattice::TwoDimFourState);
    case ClosedFormFamily::GGTorus:
      return generalized_grover_coin(2 * pr.torus_dim, pr.a, Shift::F, GroverLattice::TorusD,
                                     pr.torus_dim);
  }
  throw InvalidArgument("make_model: unknown closed form");
}

std::optional<ClosedFormId> closed_form_for(const WalkModel& model) {
  const ModelParams& pr = model.params;
  const std::string& fam = model.family;
  if (fam == "three_state_qw") return qw3_form(pr.eta, model.shift);
  if (fam == "crw_of:three_state_qw") return crw3_form(pr.eta, model.shift);
  if (fam == "four_state_qw_1d") return qw4_1d_form(pr.p, model.shift);
  if (fam == "crw_of:four_state_qw_1d") return crw4_1d_form(pr.p, model.shift);
  if (fam == "four_state_qw_2d") return qw4_2d_form(pr.p, model.shift);
  if (fam == "crw_of:four_state_qw_2d") return crw4_2d_form(pr.p, model.shift);
  if (fam == "multistate_rw") return rw_general_form(pr.weights);
  if (fam == "generalized_grover") {
    const std::size_t dc = model.num_states();
    if (model.lattice_dim == 1 && dc == 3)
      return gg_form(GroverLattice::OneDimThreeState, pr.a, model.shift);
    if (model.lattice_dim == 1 && dc == 4)
      return gg_form(GroverLattice::OneDimFourState, pr.a, model.shift);
    if (model.lattice_dim == 2 && dc == 4)
      return gg_form(GroverLattice::TwoDimFourState, pr.a, model.shift);
    if (dc == 2 * static_cast<std::size_t>(model.lattice_dim) && model.shift == Shift::F)
      return gg_form(GroverLattice::TorusD, pr.a, Shift::F, model.lattice_dim);
  }
  return std::nullopt;
}

Complex prefactor(const ClosedFormId& id, Complex u) {
  const double sgn = delta_sign(id.shift);
  const double ps = id.params.pstar();
  switch (id.family) {
    case ClosedFormFamily::QW3:
      return 1.0 + sgn * u;  // 1 + (-1)^{delta} u
    case ClosedFormFamily::QW4_1D:
      return id.shift == Shift::F ? 1.0 - u * u : Complex(1.0, 0.0);
    case ClosedFormFamily::CRW4_1D:
      return id.shift == Shift::F ? 1.0 + 4.0 * ps * ps * u * u : Complex(1.0, 0.0);
    case ClosedFormFamily::QW4_2D:
      return 1.0 - u * u;
    case ClosedFormFamily::CRW4_2D:
      return 1.0 - 4.0 * ps * ps * u * u;
    case ClosedFormFamily::GG1D3:
      return id.shift == Shift::F ? 1.0 + u : Complex(1.0, 0.0);
    case ClosedFormFamily::GG1D4:
    case ClosedFormFamily::GG2D:
      return id.shift == Shift::F ? 1.0 - u * u : Complex(1.0, 0.0);
    case ClosedFormFamily::GGTorus: {
      Complex out(1.0, 0.0);
      for (int j = 1; j < id.params.torus_dim; ++j) out *= 1.0 - u * u;
      return out;
    }
    case ClosedFormFamily::CRW3:
    case ClosedFormFamily::RWGeneral:
    case ClosedFormFamily::RWWindow:
    case ClosedFormFamily::RWUniform:
      return Complex(1.0, 0.0);
  }
  throw InvalidArgument("prefactor: unknown closed form");
}

Complex f_value(const ClosedFormId& id, std::span<const double> angles, Complex u) {
  check_angles(id, angles);
  const double d = delta_sign(id.shift);  // (-1)^{delta(s)}
  const ModelParams& pr = id.params;
  switch (id.family) {
    case ClosedFormFamily::QW3: {
      const double c = std::cos(pr.eta);
      const double t = d + c + (d - c) * std::cos(angles[0]);
      return 1.0 - t * u + u * u;
    }
    case ClosedFormFamily::CRW3: {
      const double c = std::cos(pr.eta);
      const double ct = std::cos(angles[0]);
      const double w = (1.0 - d * c) * (1.0 - d * c);
      return 1.0 - (u / 2.0) * (w * ct + 2.0 * c * c) -
             (d * u * u / 2.0) * (w * (d + 2.0 * c) * ct + c * (1.0 + c * c)) -
             (d * u * u * u / 2.0) * c * (1.0 - 3.0 * c * c);
    }
    case ClosedFormFamily::QW4_1D: {
      const double ps = pr.pstar();
      const double th = angles[0];
      const double cc = std::cos(th) + std::cos(2.0 * th);
      if (id.shift == Shift::F)
        return 1.0 - std::sqrt(1.0 - 4.0 * ps * ps) * cc * u + u * u;
      const double ss = std::sin(th) + std::sin(2.0 * th);
      const Complex i(0.0, 1.0);
      return 1.0 + (cc - 2.0 * i * ps * ss) * u - 4.0 * i * ps * std::sin(3.0 * th) * u * u -
             (cc + 2.0 * i * ps * ss) * u * u * u - u * u * u * u;
    }
    case ClosedFormFamily::CRW4_1D: {
      const double ps = pr.pstar();
      const double th = angles[0];
      const double cc = std::cos(th) + std::cos(2.0 * th);
      if (id.shift == Shift::F)
        return 1.0 - 0.5 * (1.0 - 4.0 * ps * ps) * cc * u - 4.0 * ps * ps * u * u;
      const double ss = std::sin(th) + std::sin(2.0 * th);
      const double g = 1.0 + 4.0 * ps * ps;
      const Complex i(0.0, 1.0);
      return 1.0 - 0.5 * (g * cc - 4.0 * i * ps * ss) * u -
             2.0 * i * ps * g * std::sin(3.0 * th) * u * u +
             2.0 * ps * ps * (g * cc + 4.0 * i * ps * ss) * u * u * u -
             16.0 * ps * ps * ps * ps * u * u * u * u;
    }
    case ClosedFormFamily::RWGeneral: {
      Complex symbol(0.0, 0.0);
      for (const auto& [x, px] : pr.weights)
        symbol += px * std::exp(Complex(0.0, -x * angles[0]));
      return 1.0 - u * symbol;
    }
    case ClosedFormFamily::RWWindow: {
      double symbol = pr.rw_p0;
      for (int l = 1; l <= pr.window; ++l)
        symbol += 2.0 * pr.rw_pstar * std::cos(l * angles[0]);
      return 1.0 - u * symbol;
    }
    case ClosedFormFamily::RWUniform:
      return 1.0 - u * uniform_symbol(pr.window, angles[0]);
    case ClosedFormFamily::QW4_2D: {
      const double ps = pr.pstar();
      const double mix =
          (1.0 + d * 2.0 * ps) * std::cos(angles[0]) + (1.0 - d * 2.0 * ps) * std::cos(angles[1]);
      return 1.0 - d * mix * u + u * u;
    }
    case ClosedFormFamily::CRW4_2D: {
      const double ps = pr.pstar();
      const double mix = (d + 2.0 * ps) * (d + 2.0 * ps) * std::cos(angles[0]) +
                         (d - 2.0 * ps) * (d - 2.0 * ps) * std::cos(angles[1]);
      return 1.0 - 0.5 * mix * u + 4.0 * ps * ps * u * u;
    }
    case ClosedFormFamily::GG1D3: {
      const double a = pr.a;
      const double w = 1.0 + 2.0 * std::cos(angles[0]);
      if (id.shift == Shift::F)
        return 1.0 + (a - 3.0) / 3.0 * w * u - (a - 2.0) * u * u;
      return 1.0 + a / 3.0 * w * u + (2.0 * a - 3.0) / 3.0 * w * u * u + (a - 2.0) * u * u * u;
    }
    case ClosedFormFamily::GG1D4: {
      const double a = pr.a;
      const double th = angles[0];
      const double cc = std::cos(th) + std::cos(2.0 * th);
      if (id.shift == Shift::F)
        return 1.0 + (a - 2.0) * cc * u - (2.0 * a - 3.0) * u * u;
      return 1.0 + a * cc * u +
             2.0 * (a - 1.0) * (1.0 + std::cos(th) + std::cos(3.0 * th)) * u * u +
             (3.0 * a - 4.0) * cc * u * u * u + (2.0 * a - 3.0) * u * u * u * u;
    }
    case ClosedFormFamily::GG2D: {
      const double a = pr.a;
      const double cc = std::cos(angles[0]) + std::cos(angles[1]);
      if (id.shift == Shift::F)
        return 1.0 + (a - 2.0) * cc * u - (2.0 * a - 3.0) * u * u;
      return 1.0 + a * cc * u +
             2.0 * (a - 1.0) * (1.0 + 2.0 * std::cos(angles[0]) * std::cos(angles[1])) * u * u +
             (3.0 * a - 4.0) * cc * u * u * u + (2.0 * a - 3.0) * u * u * u * u;
    }
    case ClosedFormFamily::GGTorus: {
      const double a = pr.a;
      const double dim = pr.torus_dim;
      double cs = 0.0;
      for (double w : angles) cs += std::cos(w);
      return 1.0 - 2.0 * (dim + (1.0 - dim) * a) / dim * cs * u +
             (2.0 * dim - 1.0 + 2.0 * (1.0 - dim) * a) * u * u;
    }
  }
  throw InvalidArgument("f_value: unknown closed form");
}

bool has_closed_eigenvalues(const ClosedFormId& id) {
  switch (id.family) {
    case ClosedFormFamily::QW3:
    case ClosedFormFamily::QW4_2D:
    case ClosedFormFamily::CRW4_2D:
      return true;
    case ClosedFormFamily::QW4_1D:
    case ClosedFormFamily::CRW4_1D:
      return id.shift == Shift::F;
    default:
      return false;
  }
}

std::vector<Complex> closed_eigenvalues(const ClosedFormId& id, std::span<const double> angles) {
  check_angles(id, angles);
  if (!has_closed_eigenvalues(id))
    throw NoClosedFormError("no tabulated eigenvalue list for " + closed_form_name(id));
  const double d = delta_sign(id.shift);  // (-1)^{delta(s)}
  const ModelParams& pr = id.params;
  switch (id.family) {
    case ClosedFormFamily::QW3: {
      const double c = std::cos(pr.eta);
      const double t = d + c + (d - c) * std::cos(angles[0]);
      const double root = clamped_sqrt(4.0 - t * t);
      return {Complex(-d, 0.0), Complex(t / 2.0, root / 2.0), Complex(t / 2.0, -root / 2.0)};
    }
    case ClosedFormFamily::QW4_1D: {
      const double ps = pr.pstar();
      const double alpha = 0.5 * std::sqrt(1.0 - 4.0 * ps * ps) *
                           (std::cos(angles[0]) + std::cos(2.0 * angles[0]));
      const double root = clamped_sqrt(1.0 - alpha * alpha);
      return {Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(alpha, root),
              Complex(alpha, -root)};
    }
    case ClosedFormFamily::CRW4_1D: {
      const double ps = pr.pstar();
      // alpha_c carries (1 - 4 p*^2); this is the reading that reproduces the
      // determinant (the F factor carries the same coefficient).
      const double alpha = 0.25 * (1.0 - 4.0 * ps * ps) *
                           (std::cos(angles[0]) + std::cos(2.0 * angles[0]));
      const double root = std::sqrt(alpha * alpha + 4.0 * ps * ps);
      return {Complex(0.0, 2.0 * ps), Complex(0.0, -2.0 * ps), Complex(alpha + root, 0.0),
              Complex(alpha - root, 0.0)};
    }
    case ClosedFormFamily::QW4_2D: {
      const double ps = pr.pstar();
      const double dl = shift_delta(id.shift);
      const double beta =
          (0.5 - dl + ps) * std::cos(angles[0]) + (0.5 - dl - ps) * std::cos(angles[1]);
      const double root = clamped_sqrt(1.0 - beta * beta);
      return {Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(beta, root), Complex(beta, -root)};
    }
    case ClosedFormFamily::CRW4_2D: {
      const double ps = pr.pstar();
      const double dl = shift_delta(id.shift);
      const double b1 = 0.5 - dl + ps;
      const double b2 = 0.5 - dl - ps;
      const double beta = b1 * b1 * std::cos(angles[0]) + b2 * b2 * std::cos(angles[1]);
      const Complex root = std::sqrt(Complex(beta * beta - 4.0 * ps * ps, 0.0));
      return {Complex(2.0 * ps, 0.0), Complex(-2.0 * ps, 0.0), beta + root, beta - root};
    }
    default:
      break;
  }
  throw NoClosedFormError("no tabulated eigenvalue list for " + closed_form_name(id));
}

double rw_limit_zeta_closed(double u) {
  if (!(std::abs(u) < 1.0)) throw InvalidArgument("rw_limit_zeta_closed: |u| must be < 1");
  return (1.0 + std::sqrt(1.0 - u * u)) / 2.0;
}

double log_series_lemma(double x, int n_terms) {
  if (!(std::abs(x) < 1.0)) throw InvalidArgument("log_series_lemma: |x| must be < 1");
  if (n_terms < 0) throw InvalidArgument("log_series_lemma: n_terms must be >= 0");
  double sum = 0.0;
  double central = 1.0;  // C(2n, n) (x^2/4)^n, starting at n = 0
  const double ratio_base = x * x / 4.0;
  for (int n = 1; n <= n_terms; ++n) {
    central *= 2.0 * (2.0 * n - 1.0) / n * ratio_base;
    sum -= central / (2.0 * n);
  }
  return sum;
}

double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (const Complex& x : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Complex& y : b) nearest = std::min(nearest, std::abs(x - y));
    worst = std::max(worst, nearest);
  }
  for (const Complex& y : b) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Complex& x : a) nearest = std::min(nearest, std::abs(x - y));
    worst = std::max(worst, nearest);
  }
  return worst;
}

ClosedFormCheck verify_closed_form(const ClosedFormId& id, int angle_points,
                                   std::span<const Complex> us) {
  if (angle_points < 1) throw InvalidArgument("verify_closed_form: angle_points must be >= 1");
  const WalkModel model = make_model(id);
  ClosedFormCheck check;
  check.has_eigenvalues = has_closed_eigenvalues(id);
  for_each_grid_point(model.lattice_dim, angle_points, [&](std::span<const double> angles) {
    const ComplexMatrix block = fourier_block(model, angles);
    for (const Complex& u : us) {
      ComplexMatrix f = ComplexMatrix::identity(block.rows());
      for (std::size_t i = 0; i < f.data().size(); ++i) f.data()[i] -= u * block.data()[i];
      const Complex closed = prefactor(id, u) * f_value(id, angles, u);
      check.det_residual = std::max(check.det_residual, std::abs(determinant(f) - closed));
    }
    if (check.has_eigenvalues) {
      const std::vector<Complex> numeric = eigenvalues(block);
      const std::vector<Complex> closed = closed_eigenvalues(id, angles);
      check.eig_residual = std::max(check.eig_residual, hausdorff_distance(numeric, closed));
    }
  });
  return check;
}

}  // namespace walkzeta
