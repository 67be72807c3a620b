#include "walkzeta/models.hpp"

#include <cmath>
#include <cstdlib>

#include "walkzeta/errors.hpp"
#include "walkzeta/linalg.hpp"

namespace walkzeta {

namespace {

constexpr double kClassifyTol = 1e-10;

const ComplexMatrix& sigma_swap() {
  static const ComplexMatrix s{{0.0, 1.0}, {1.0, 0.0}};
  return s;
}

std::vector<Step> unit_steps_1d(const std::vector<int>& displacements) {
  std::vector<Step> steps;
  steps.reserve(displacements.size());
  for (std::size_t j = 0; j < displacements.size(); ++j)
    steps.push_back(Step{{displacements[j]}, j, 1.0});
  return steps;
}

// Displacement table (-e1, +e1, ..., -ed, +ed): row 2j-2 moves -e_j, row 2j-1
// moves +e_j.
std::vector<Step> nearest_neighbor_steps(int dim) {
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * dim));
  for (int j = 0; j < dim; ++j)
    for (int dir : {-1, +1}) {
      std::vector<int> v(static_cast<std::size_t>(dim), 0);
      v[static_cast<std::size_t>(j)] = dir;
      steps.push_back(Step{v, steps.size(), 1.0});
    }
  return steps;
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0,1]");
}

}  // namespace

int shift_delta(Shift s) { return s == Shift::M ? 1 : 0; }

char shift_char(Shift s) { return s == Shift::M ? 'm' : 'f'; }

Shift shift_from_char(char c) {
  if (c == 'm' || c == 'M') return Shift::M;
  if (c == 'f' || c == 'F') return Shift::F;
  throw InvalidArgument("shift must be 'm' or 'f'");
}

bool WalkModel::is_qw_family() const {
  return family == "three_state_qw" || family == "four_state_qw_1d" ||
         family == "four_state_qw_2d";
}

std::vector<std::vector<int>> WalkModel::displacements() const {
  if (steps.size() != num_states())
    throw InvalidArgument("displacements(): model does not carry one step per chirality");
  std::vector<std::vector<int>> out(steps.size());
  for (const Step& s : steps) out[s.row] = s.displacement;
  return out;
}

WalkModel three_state_qw(double eta, Shift shift) {
  const double c = std::cos(eta);
  const double s = std::sin(eta) / std::sqrt(2.0);
  const ComplexMatrix m_type{{-(1.0 + c) / 2.0, s, (1.0 - c) / 2.0},
                             {s, c, s},
                             {(1.0 - c) / 2.0, s, -(1.0 + c) / 2.0}};
  const ComplexMatrix f_type{{(1.0 - c) / 2.0, s, -(1.0 + c) / 2.0},
                             {s, c, s},
                             {-(1.0 + c) / 2.0, s, (1.0 - c) / 2.0}};
  WalkModel model;
  model.coin = shift == Shift::M ? m_type : f_type;
  model.steps = unit_steps_1d({-1, 0, +1});
  model.lattice_dim = 1;
  model.shift = shift;
  model.family = "three_state_qw";
  model.params.eta = eta;
  return model;
}

WalkModel four_state_qw_1d(double p, Shift shift) {
  require_probability(p, "p");
  const double q = 1.0 - p;
  const double r = std::sqrt(p * q);
  const ComplexMatrix m_type{{p - 1.0, p, r, r},
                             {p, p - 1.0, r, r},
                             {r, r, q - 1.0, q},
                             {r, r, q, q - 1.0}};
  // F-type rows are the M-type rows in reversed order (direction reversal
  // for the jump table -2, -1, +1, +2).
  const ComplexMatrix f_type{{r, r, q, q - 1.0},
                             {r, r, q - 1.0, q},
                             {p, p - 1.0, r, r},
                             {p - 1.0, p, r, r}};
  WalkModel model;
  model.coin = shift == Shift::M ? m_type : f_type;
  model.steps = unit_steps_1d({-2, -1, +1, +2});
  model.lattice_dim = 1;
  model.shift = shift;
  model.family = "four_state_qw_1d";
  model.params.p = p;
  return model;
}

WalkModel four_state_qw_2d(double p, Shift shift) {
  require_probability(p, "p");
  const double q = 1.0 - p;
  const double r = std::sqrt(p * q);
  ComplexMatrix coin{{p - 1.0, p, r, r},
                     {p, p - 1.0, r, r},
                     {r, r, q - 1.0, q},
                     {r, r, q, q - 1.0}};
  if (shift == Shift::F)
    coin = kronecker(ComplexMatrix::identity(2), sigma_swap()) * coin;
  WalkModel model;
  model.coin = coin;
  model.steps = nearest_neighbor_steps(2);
  model.lattice_dim = 2;
  model.shift = shift;
  model.family = "four_state_qw_2d";
  model.params.p = p;
  return model;
}

WalkModel crw_from_qw(const WalkModel& model) {
  if (!model.is_qw_family())
    throw InvalidArgument("crw_from_qw: input family '" + model.family + "' is not a QW");
  WalkModel out = model;
  out.coin = hadamard(model.coin, model.coin);
  out.family = "crw_of:" + model.family;
  return out;
}

ComplexMatrix generalized_grover_matrix(int d_c, double a) {
  if (d_c < 2) throw InvalidArgument("generalized Grover matrix needs d_c >= 2");
  const double off = (2.0 / d_c - 1.0) * a + 1.0;
  ComplexMatrix u(static_cast<std::size_t>(d_c), static_cast<std::size_t>(d_c));
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = (i == j) ? off - 1.0 : off;
  return u;
}

WalkModel generalized_grover_coin(int d_c, double a, Shift shift, GroverLattice lattice,
                                  int torus_dim) {
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("a must lie in [0,1]");
  WalkModel model;
  model.shift = shift;
  model.family = "generalized_grover";
  model.params.a = a;
  switch (lattice) {
    case GroverLattice::OneDimThreeState:
      if (d_c != 3) throw InvalidArgument("1d-3state lattice requires d_c = 3");
      model.steps = unit_steps_1d({-1, 0, +1});
      model.lattice_dim = 1;
      break;
    case GroverLattice::OneDimFourState:
      if (d_c != 4) throw InvalidArgument("1d-4state lattice requires d_c = 4");
      model.steps = unit_steps_1d({-2, -1, +1, +2});
      model.lattice_dim = 1;
      break;
    case GroverLattice::TwoDimFourState:
      if (d_c != 4) throw InvalidArgument("2d-4state lattice requires d_c = 4");
      model.steps = nearest_neighbor_steps(2);
      model.lattice_dim = 2;
      break;
    case GroverLattice::TorusD:
      if (torus_dim < 1) throw InvalidArgument("torus-d lattice requires d >= 1");
      if (d_c != 2 * torus_dim) throw InvalidArgument("torus-d lattice requires d_c = 2d");
      model.steps = nearest_neighbor_steps(torus_dim);
      model.lattice_dim = torus_dim;
      model.params.torus_dim = torus_dim;
      break;
  }
  const ComplexMatrix u = generalized_grover_matrix(d_c, a);
  if (shift == Shift::M) {
    model.coin = u;
  } else if (lattice == GroverLattice::OneDimThreeState ||
             lattice == GroverLattice::OneDimFourState) {
    // Displayed F-type matrices: rows of U(a) in reversed order.
    ComplexMatrix coin(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) coin(i, j) = u(u.rows() - 1 - i, j);
    model.coin = coin;
  } else {
    model.coin =
        kronecker(ComplexMatrix::identity(u.rows() / 2), sigma_swap()) * u;
  }
  return model;
}

WalkModel multistate_rw(const std::map<int, double>& weights) {
  if (weights.empty()) throw InvalidArgument("multistate_rw: empty weight map");
  double total = 0.0;
  int window = 0;
  for (const auto& [x, px] : weights) {
    require_probability(px, "p_x");
    total += px;
    window = std::max(window, std::abs(x));
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidArgument("multistate_rw: weights must sum to 1");
  WalkModel model;
  model.coin = ComplexMatrix{{1.0}};
  for (const auto& [x, px] : weights) model.steps.push_back(Step{{x}, 0, px});
  model.lattice_dim = 1;
  model.family = "multistate_rw";
  model.params.weights = weights;
  model.params.window = window;
  return model;
}

CoinClass classify(const WalkModel& model) {
  const ComplexMatrix& a = model.coin;
  CoinClass out;

  const ComplexMatrix gram = conjugate_transpose(a) * a;
  out.unitary = max_abs_diff(gram, ComplexMatrix::identity(a.rows())) < kClassifyTol;

  bool entries_ok = true;
  for (const Complex& z : a.data())
    if (std::abs(z.imag()) > kClassifyTol || z.real() < -kClassifyTol ||
        z.real() > 1.0 + kClassifyTol)
      entries_ok = false;
  bool cols_ok = true, rows_ok = true;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, j);
    if (std::abs(sum - 1.0) > kClassifyTol) cols_ok = false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex sum(0.0, 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j);
    if (std::abs(sum - 1.0) > kClassifyTol) rows_ok = false;
  }
  out.column_stochastic = entries_ok && cols_ok;
  out.doubly_stochastic = entries_ok && cols_ok && rows_ok;
  return out;
}

}  // namespace walkzeta
