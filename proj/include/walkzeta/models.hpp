#ifndef WALKZETA_MODELS_HPP
#define WALKZETA_MODELS_HPP

#include <map>
#include <string>
#include <vector>

#include "walkzeta/matrix.hpp"

namespace walkzeta {

/// Shift type: moving (M) vs flip-flop (F). delta(M) = 1, delta(F) = 0.
enum class Shift { M, F };

int shift_delta(Shift s);
char shift_char(Shift s);
Shift shift_from_char(char c);

/// Lattice variants a generalized Grover coin can be attached to.
enum class GroverLattice { OneDimThreeState, OneDimFourState, TwoDimFourState, TorusD };

struct ModelParams {
  double eta = 0.0;               // three-state coin angle
  double p = 0.0;                 // four-state splitting probability
  double a = 0.0;                 // generalized Grover interpolation
  int window = 0;                 // random-walk window L
  int torus_dim = 0;              // d for the torus-d Grover family
  std::map<int, double> weights;  // random-walk jump weights p_x
  double rw_p0 = 0.0;             // window-form random walk: stay weight
  double rw_pstar = 0.0;          // window-form random walk: off-origin weight

  double pstar() const { return p - 0.5; }
  double q() const { return 1.0 - p; }
};

/// One shift term of the walk: the coin row `row` is transported by
/// `displacement`, scaled by `weight`. Standard families have one step per
/// chirality with weight 1; the scalar random walk has one weighted step per
/// jump length.
struct Step {
  std::vector<int> displacement;
  std::size_t row = 0;
  double weight = 1.0;
};

struct WalkModel {
  ComplexMatrix coin;  // d_c x d_c
  std::vector<Step> steps;
  int lattice_dim = 1;
  Shift shift = Shift::M;
  std::string family;
  ModelParams params;

  std::size_t num_states() const { return coin.rows(); }
  bool is_qw_family() const;
  /// One displacement per chirality row; only valid for the non-RW families.
  std::vector<std::vector<int>> displacements() const;
};

/// §-three-state coin on Z, displacements (-1, 0, +1). Grover at cos eta = -1/3.
WalkModel three_state_qw(double eta, Shift shift);

/// Four-state coin on Z, displacements (-2, -1, +1, +2). Grover at p = 1/2.
WalkModel four_state_qw_1d(double p, Shift shift);

/// Four-state coin on Z^2, displacements (-e1, +e1, -e2, +e2).
/// F-type coin is (I_2 (x) sigma) * M-type coin.
WalkModel four_state_qw_2d(double p, Shift shift);

/// Correlated walk from a quantum walk: coin replaced by its Hadamard square.
WalkModel crw_from_qw(const WalkModel& model);

/// Generalized Grover coin U(a)_ij = (2/d_c - 1)a + 1 - delta_ij on the given
/// lattice variant. torus_dim is required only for GroverLattice::TorusD.
WalkModel generalized_grover_coin(int d_c, double a, Shift shift, GroverLattice lattice,
                                  int torus_dim = 0);

/// Multi-state random walk on Z: jump to x in {-L..L} with probability
/// weights[x]. d_c = 1, coin = [1], the weight rides on the step.
WalkModel multistate_rw(const std::map<int, double>& weights);

struct CoinClass {
  bool unitary = false;
  bool column_stochastic = false;
  bool doubly_stochastic = false;
};

/// Coin classification with tolerance 1e-10.
CoinClass classify(const WalkModel& model);

/// The bare generalized Grover matrix U(a).
ComplexMatrix generalized_grover_matrix(int d_c, double a);

}  // namespace walkzeta

#endif
