#ifndef WALKZETA_OPERATORS_HPP
#define WALKZETA_OPERATORS_HPP

#include <span>
#include <vector>

#include "walkzeta/models.hpp"

namespace walkzeta {

/// The torus T^d_N: dimension d >= 1, side length N >= 2.
struct TorusSpec {
  int dim = 1;
  int side = 2;
};

/// N^d.
std::size_t torus_sites(const TorusSpec& torus);

/// Row cap for dense full-operator construction.
inline constexpr std::size_t kOperatorRowCap = 4096;

/// A chirality-vector field over the torus sites. Site-major lexicographic
/// layout, chirality-minor: component c of site x lives at site_index(x) *
/// num_components + c.
class StateField {
 public:
  StateField(const TorusSpec& torus, std::size_t num_components);

  static StateField delta_at_origin(const TorusSpec& torus,
                                    const std::vector<Complex>& chirality_vector);

  const TorusSpec& torus() const { return torus_; }
  std::size_t num_components() const { return components_; }
  std::size_t num_sites() const { return values_.size() / components_; }

  Complex& at(std::size_t site, std::size_t component) {
    return values_[site * components_ + component];
  }
  const Complex& at(std::size_t site, std::size_t component) const {
    return values_[site * components_ + component];
  }

  std::vector<Complex>& values() { return values_; }
  const std::vector<Complex>& values() const { return values_; }

  /// Lexicographic site index of coordinates (reduced mod N).
  std::size_t site_index(std::span<const int> coords) const;
  /// Inverse of site_index.
  std::vector<int> site_coords(std::size_t index) const;

 private:
  TorusSpec torus_;
  std::size_t components_;
  std::vector<Complex> values_;
};

/// Momentum-space block: M(k) = sum_steps weight * e^{-i<v,k>} * P_row * coin.
/// Displacement +e_j carries phase e^{-i k_j}.
ComplexMatrix fourier_block(const WalkModel& model, std::span<const double> k);

/// Dense d_c N^d x d_c N^d walk operator. Block (x, y) receives
/// weight * P_row * coin for every step with y = x - v (mod N).
ComplexMatrix full_operator(const WalkModel& model, const TorusSpec& torus);

/// One evolution step: Psi'(x) = sum_steps weight * P_row coin Psi(x - v),
/// periodic wrap.
StateField evolve_step(const WalkModel& model, const StateField& state);

/// mu(x) = sum_c |Psi^c(x)|^p for p in {1, 2}, indexed by lex site index.
std::vector<double> measure(const StateField& state, int p);

/// Return matrix weight Phi_r(0) of the walk on Z^d (nothing truncated; the
/// support window grows with r).
ComplexMatrix matrix_weight_origin(const WalkModel& model, int r);

}  // namespace walkzeta

#endif
