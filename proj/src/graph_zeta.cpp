#include "walkzeta/graph_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "walkzeta/errors.hpp"
#include "walkzeta/linalg.hpp"

namespace walkzeta {

RegularGraph::RegularGraph(std::string name, int vertex_count,
                           std::vector<std::pair<int, int>> edges)
    : name_(std::move(name)), n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 2) throw InvalidArgument("graph needs at least two vertices");
  std::set<std::pair<int, int>> seen;
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw NotSimpleError("graph not simple: loop at vertex " + std::to_string(u));
    if (!seen.insert({u, v}).second)
      throw NotSimpleError("graph not simple: repeated edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "}");
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  degree_ = deg.empty() ? 0 : deg[0];
  for (int d : deg)
    if (d != degree_) throw InvalidArgument("graph is not regular");
  if (degree_ == 0) throw InvalidArgument("graph has isolated vertices");
  // connectivity
  std::vector<char> reached(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges_) {
      const int other = a == v ? b : (b == v ? a : -1);
      if (other >= 0 && !reached[static_cast<std::size_t>(other)]) {
        reached[static_cast<std::size_t>(other)] = 1;
        stack.push_back(other);
      }
    }
  }
  if (std::count(reached.begin(), reached.end(), 1) != n_)
    throw InvalidArgument("graph is not connected");
}

int RegularGraph::arc_origin(int arc) const {
  const auto& e = edges_[static_cast<std::size_t>(arc / 2)];
  return arc % 2 == 0 ? e.first : e.second;
}

int RegularGraph::arc_target(int arc) const {
  const auto& e = edges_[static_cast<std::size_t>(arc / 2)];
  return arc % 2 == 0 ? e.second : e.first;
}

RegularGraph build_cycle(int n) {
  if (n < 3) throw NotSimpleError("cycle(" + std::to_string(n) + ") is not simple; need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return RegularGraph("cycle(" + std::to_string(n) + ")", n, std::move(edges));
}

RegularGraph build_complete(int n) {
  if (n < 2) throw InvalidArgument("complete(n) needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return RegularGraph("complete(" + std::to_string(n) + ")", n, std::move(edges));
}

RegularGraph build_petersen() {
  // outer 5-cycle 0..4, spokes to 5..9, inner pentagram on 5..9
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return RegularGraph("petersen", 10, std::move(edges));
}

RegularGraph build_hypercube(int dim) {
  if (dim < 1) throw InvalidArgument("hypercube(d) needs d >= 1");
  if (dim > 10) throw SizeCapError("hypercube(d) capped at d = 10");
  const int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return RegularGraph("hypercube(" + std::to_string(dim) + ")", n, std::move(edges));
}

RegularGraph build_torus_graph(int dim, int side) {
  if (dim < 1) throw InvalidArgument("torus(d, N) needs d >= 1");
  if (side < 3)
    throw NotSimpleError("torus(d, " + std::to_string(side) + ") is not simple; need N >= 3");
  std::size_t n = 1;
  for (int j = 0; j < dim; ++j) n *= static_cast<std::size_t>(side);
  if (n > 2048) throw SizeCapError("torus graph too large for dense verification");
  // vertex index: lexicographic over coordinates
  std::vector<std::pair<int, int>> edges;
  std::vector<int> coords(static_cast<std::size_t>(dim), 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t rest = v;
    for (int j = dim - 1; j >= 0; --j) {
      coords[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::size_t>(side));
      rest /= static_cast<std::size_t>(side);
    }
    for (int j = 0; j < dim; ++j) {
      std::size_t w = 0;
      for (int l = 0; l < dim; ++l) {
        const int c = l == j ? (coords[static_cast<std::size_t>(l)] + 1) % side
                             : coords[static_cast<std::size_t>(l)];
        w = w * static_cast<std::size_t>(side) + static_cast<std::size_t>(c);
      }
      edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
    }
  }
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return RegularGraph("torus(" + std::to_string(dim) + "," + std::to_string(side) + ")",
                      static_cast<int>(n), std::move(edges));
}

ComplexMatrix transition_matrix(const RegularGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ComplexMatrix p(n, n);
  const double inv_deg = 1.0 / g.degree();
  for (const auto& [u, v] : g.edges()) {
    p(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = inv_deg;
    p(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = inv_deg;
  }
  return p;
}

ComplexMatrix arc_operator(const RegularGraph& g, double a) {
  const int arcs = g.arc_count();
  ComplexMatrix op(static_cast<std::size_t>(arcs), static_cast<std::size_t>(arcs));
  const double base = (2.0 / g.degree() - 1.0) * a + 1.0;
  for (int e = 0; e < arcs; ++e)
    for (int f = 0; f < arcs; ++f) {
      if (g.arc_origin(e) != g.arc_target(f)) continue;
      const double entry = base - (e == g.arc_inverse(f) ? 1.0 : 0.0);
      op(static_cast<std::size_t>(e), static_cast<std::size_t>(f)) = entry;
    }
  return op;
}

Complex konno_sato_lhs(const RegularGraph& g, double a, Complex u) {
  if (static_cast<std::size_t>(g.arc_count()) > 4096)
    throw SizeCapError("konno_sato_lhs: arc operator exceeds dense cap");
  const ComplexMatrix op = arc_operator(g, a);
  ComplexMatrix f = ComplexMatrix::identity(op.rows());
  for (std::size_t i = 0; i < f.data().size(); ++i) f.data()[i] -= u * op.data()[i];
  return determinant(f);
}

Complex konno_sato_rhs(const RegularGraph& g, double a, Complex u) {
  const int q = g.degree() - 1;
  const double c2 = q + (1.0 - q) * a;   // coefficient of u^2
  const double c1 = 1.0 + q + (1.0 - q) * a;  // coefficient of u P
  const ComplexMatrix p = transition_matrix(g);
  ComplexMatrix m = ComplexMatrix::identity(p.rows());
  const Complex diag = 1.0 + c2 * u * u;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      m(i, j) = (i == j ? diag : Complex(0.0, 0.0)) - c1 * u * p(i, j);
  Complex front(1.0, 0.0);
  const int exponent = g.edge_count() - g.vertex_count();  // -1 only for K_2
  for (int i = 0; i < exponent; ++i) front *= 1.0 - u * u;
  for (int i = 0; i > exponent; --i) front /= 1.0 - u * u;
  return front * determinant(m);
}

double verify_konno_sato(const RegularGraph& g, std::span<const double> a_grid,
                         std::span<const Complex> u_grid) {
  double worst = 0.0;
  for (const double a : a_grid)
    for (const Complex& u : u_grid) {
      const Complex lhs = konno_sato_lhs(g, a, u);
      const Complex rhs = konno_sato_rhs(g, a, u);
      const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
      worst = std::max(worst, std::abs(lhs - rhs) / denom);
    }
  return worst;
}

}  // namespace walkzeta
