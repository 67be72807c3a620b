#include "walkzeta/operators.hpp"

#include <cmath>
#include <cstdlib>

#include "walkzeta/errors.hpp"

namespace walkzeta {

namespace {

// mathematical mod: result in [0, n)
int wrap(int value, int n) {
  const int r = value % n;
  return r < 0 ? r + n : r;
}

void check_lattice_dim(const WalkModel& model, int dim, const char* what) {
  if (model.lattice_dim != dim)
    throw DimensionError(std::string(what) + ": lattice dimension mismatch");
}

}  // namespace

std::size_t torus_sites(const TorusSpec& torus) {
  if (torus.dim < 1 || torus.side < 2)
    throw InvalidArgument("torus requires dim >= 1 and side >= 2");
  std::size_t n = 1;
  for (int j = 0; j < torus.dim; ++j) n *= static_cast<std::size_t>(torus.side);
  return n;
}

StateField::StateField(const TorusSpec& torus, std::size_t num_components)
    : torus_(torus), components_(num_components),
      values_(torus_sites(torus) * num_components, Complex(0.0, 0.0)) {
  if (num_components == 0) throw InvalidArgument("StateField needs at least one component");
}

StateField StateField::delta_at_origin(const TorusSpec& torus,
                                       const std::vector<Complex>& chirality_vector) {
  StateField state(torus, chirality_vector.size());
  for (std::size_t c = 0; c < chirality_vector.size(); ++c) state.at(0, c) = chirality_vector[c];
  return state;
}

std::size_t StateField::site_index(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != torus_.dim)
    throw DimensionError("site_index: coordinate count mismatch");
  std::size_t index = 0;
  for (int j = 0; j < torus_.dim; ++j)
    index = index * static_cast<std::size_t>(torus_.side) +
            static_cast<std::size_t>(wrap(coords[static_cast<std::size_t>(j)], torus_.side));
  return index;
}

std::vector<int> StateField::site_coords(std::size_t index) const {
  std::vector<int> coords(static_cast<std::size_t>(torus_.dim), 0);
  for (int j = torus_.dim - 1; j >= 0; --j) {
    coords[static_cast<std::size_t>(j)] =
        static_cast<int>(index % static_cast<std::size_t>(torus_.side));
    index /= static_cast<std::size_t>(torus_.side);
  }
  return coords;
}

ComplexMatrix fourier_block(const WalkModel& model, std::span<const double> k) {
  if (static_cast<int>(k.size()) != model.lattice_dim)
    throw DimensionError("fourier_block: wavenumber dimension mismatch");
  const std::size_t dc = model.num_states();
  ComplexMatrix block(dc, dc);
  for (const Step& step : model.steps) {
    double phase = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) phase += step.displacement[j] * k[j];
    const Complex factor = step.weight * std::exp(Complex(0.0, -phase));
    for (std::size_t c = 0; c < dc; ++c) block(step.row, c) += factor * model.coin(step.row, c);
  }
  return block;
}

ComplexMatrix full_operator(const WalkModel& model, const TorusSpec& torus) {
  check_lattice_dim(model, torus.dim, "full_operator");
  const std::size_t sites = torus_sites(torus);
  const std::size_t dc = model.num_states();
  if (sites * dc > kOperatorRowCap) throw SizeCapError("full_operator: row cap exceeded");
  ComplexMatrix op(sites * dc, sites * dc);
  StateField indexer(torus, dc);  // coordinate helper
  std::vector<int> source(static_cast<std::size_t>(torus.dim));
  for (std::size_t x = 0; x < sites; ++x) {
    const std::vector<int> coords = indexer.site_coords(x);
    for (const Step& step : model.steps) {
      for (int j = 0; j < torus.dim; ++j)
        source[static_cast<std::size_t>(j)] =
            coords[static_cast<std::size_t>(j)] - step.displacement[static_cast<std::size_t>(j)];
      const std::size_t y = indexer.site_index(source);
      for (std::size_t c = 0; c < dc; ++c)
        op(x * dc + step.row, y * dc + c) += step.weight * model.coin(step.row, c);
    }
  }
  return op;
}

StateField evolve_step(const WalkModel& model, const StateField& state) {
  check_lattice_dim(model, state.torus().dim, "evolve_step");
  if (state.num_components() != model.num_states())
    throw DimensionError("evolve_step: component count mismatch");
  const std::size_t dc = model.num_states();
  StateField next(state.torus(), dc);
  std::vector<int> source(static_cast<std::size_t>(state.torus().dim));
  for (std::size_t x = 0; x < state.num_sites(); ++x) {
    const std::vector<int> coords = state.site_coords(x);
    for (const Step& step : model.steps) {
      for (std::size_t j = 0; j < source.size(); ++j)
        source[j] = coords[j] - step.displacement[j];
      const std::size_t y = state.site_index(source);
      Complex acc(0.0, 0.0);
      for (std::size_t c = 0; c < dc; ++c) acc += model.coin(step.row, c) * state.at(y, c);
      next.at(x, step.row) += step.weight * acc;
    }
  }
  return next;
}

std::vector<double> measure(const StateField& state, int p) {
  if (p != 1 && p != 2) throw InvalidArgument("measure: p must be 1 or 2");
  std::vector<double> mu(state.num_sites(), 0.0);
  for (std::size_t x = 0; x < state.num_sites(); ++x)
    for (std::size_t c = 0; c < state.num_components(); ++c) {
      const double m = std::abs(state.at(x, c));
      mu[x] += p == 1 ? m : m * m;
    }
  return mu;
}

ComplexMatrix matrix_weight_origin(const WalkModel& model, int r) {
  if (r < 0) throw InvalidArgument("matrix_weight_origin: r must be >= 0");
  const std::size_t dc = model.num_states();
  if (r == 0) return ComplexMatrix::identity(dc);

  int vmax = 1;
  for (const Step& step : model.steps)
    for (int v : step.displacement) vmax = std::max(vmax, std::abs(v));
  const int radius = r * vmax;
  const int width = 2 * radius + 1;
  const int dim = model.lattice_dim;

  std::size_t cells = 1;
  for (int j = 0; j < dim; ++j) cells *= static_cast<std::size_t>(width);
  auto cell_of = [&](const std::vector<int>& x) {
    std::size_t idx = 0;
    for (int j = 0; j < dim; ++j)
      idx = idx * static_cast<std::size_t>(width) +
            static_cast<std::size_t>(x[static_cast<std::size_t>(j)] + radius);
    return idx;
  };

  std::vector<ComplexMatrix> weights(cells, ComplexMatrix(dc, dc));
  std::vector<ComplexMatrix> next(cells, ComplexMatrix(dc, dc));
  weights[cell_of(std::vector<int>(static_cast<std::size_t>(dim), 0))] =
      ComplexMatrix::identity(dc);

  std::vector<int> coords(static_cast<std::size_t>(dim), -radius);
  std::vector<int> source(static_cast<std::size_t>(dim));
  for (int n = 1; n <= r; ++n) {
    for (auto& cell : next)
      for (Complex& z : cell.data()) z = Complex(0.0, 0.0);
    // support after n steps is bounded by n * vmax in every axis
    const int bound = n * vmax;
    std::fill(coords.begin(), coords.end(), -bound);
    bool done = false;
    while (!done) {
      ComplexMatrix& target = next[cell_of(coords)];
      for (const Step& step : model.steps) {
        bool inside = true;
        for (std::size_t j = 0; j < source.size(); ++j) {
          source[j] = coords[j] - step.displacement[j];
          if (std::abs(source[j]) > radius) inside = false;
        }
        if (!inside) continue;
        const ComplexMatrix& prev = weights[cell_of(source)];
        // target row `step.row` += weight * (coin row) * prev
        for (std::size_t c2 = 0; c2 < dc; ++c2) {
          Complex acc(0.0, 0.0);
          for (std::size_t c1 = 0; c1 < dc; ++c1)
            acc += model.coin(step.row, c1) * prev(c1, c2);
          target(step.row, c2) += step.weight * acc;
        }
      }
      // advance lexicographically over [-bound, bound]^dim
      int axis = dim - 1;
      while (axis >= 0) {
        if (++coords[static_cast<std::size_t>(axis)] <= bound) break;
        coords[static_cast<std::size_t>(axis)] = -bound;
        --axis;
      }
      done = axis < 0;
    }
    std::swap(weights, next);
  }
  return weights[cell_of(std::vector<int>(static_cast<std::size_t>(dim), 0))];
}

}  // namespace walkzeta
