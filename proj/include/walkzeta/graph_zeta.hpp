#ifndef WALKZETA_GRAPH_ZETA_HPP
#define WALKZETA_GRAPH_ZETA_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "walkzeta/matrix.hpp"

namespace walkzeta {

/// A simple connected (q+1)-regular graph with its arc structure. Arcs are
/// ordered (edge index, direction): arc 2i runs along edge i from the smaller
/// endpoint, arc 2i+1 is its inverse.
class RegularGraph {
 public:
  RegularGraph(std::string name, int vertex_count, std::vector<std::pair<int, int>> edges);

  const std::string& name() const { return name_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int arc_count() const { return 2 * edge_count(); }
  int degree() const { return degree_; }  // q + 1

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int arc_origin(int arc) const;
  int arc_target(int arc) const;
  int arc_inverse(int arc) const { return arc ^ 1; }

 private:
  std::string name_;
  int n_;
  int degree_;
  std::vector<std::pair<int, int>> edges_;
};

RegularGraph build_cycle(int n);              // n >= 3
RegularGraph build_complete(int n);           // n >= 2
RegularGraph build_petersen();
RegularGraph build_hypercube(int dim);        // dim >= 1
RegularGraph build_torus_graph(int dim, int side);  // side >= 3

/// Simple-random-walk transition matrix P = A(G) / (q+1).
ComplexMatrix transition_matrix(const RegularGraph& g);

/// 2m x 2m arc-space operator: entry (e, f) is
/// [(2/d_{t(f)} - 1) a + 1 - delta_{e, f^{-1}}] when o(e) = t(f), else 0.
/// a = 1 gives the Grover arc matrix, a = 0 its positive support.
ComplexMatrix arc_operator(const RegularGraph& g, double a);

/// det(I_{2m} - u * arc_operator(g, a)).
Complex konno_sato_lhs(const RegularGraph& g, double a, Complex u);

/// (1-u^2)^{m-n} det[(1 + (q + (1-q)a) u^2) I_n - (1 + q + (1-q)a) u P_n].
Complex konno_sato_rhs(const RegularGraph& g, double a, Complex u);

/// max over the grids of |lhs - rhs| / max(|lhs|, |rhs|, 1e-30).
double verify_konno_sato(const RegularGraph& g, std::span<const double> a_grid,
                         std::span<const Complex> u_grid);

}  // namespace walkzeta

#endif
