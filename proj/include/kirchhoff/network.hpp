#pragma once

// Effective resistance and voltage on a connected weighted multigraph, where
// every edge is a resistor whose resistance equals its length.

#include "kirchhoff/exact.hpp"
#include "kirchhoff/graph.hpp"

namespace kirchhoff {

/// Discrete Laplacian with conductance 1/length per edge, rows ordered as
/// g.vertices(). Loops contribute nothing. Throws DisconnectedGraphError.
RationalMatrix laplacian(const Multigraph& g);

/// Moore-Penrose pseudo-inverse of a connected-graph Laplacian, computed as
/// (L - J/n)^{-1} + J/n. Throws DisconnectedGraphError when the inner matrix
/// is singular.
RationalMatrix pseudo_inverse(const RationalMatrix& laplacian);

/// Immutable network: the graph plus its Laplacian and pseudo-inverse.
class Network {
 public:
  /// Throws DisconnectedGraphError for a disconnected or empty graph.
  explicit Network(Multigraph graph);

  const Multigraph& graph() const noexcept { return graph_; }
  const RationalMatrix& laplacian() const noexcept { return laplacian_; }
  const RationalMatrix& pseudo_inverse() const noexcept { return pseudo_inverse_; }

  /// r(p, q) = l+_pp - 2 l+_pq + l+_qq.
  Rational resistance(VertexId p, VertexId q) const;

  /// j_z(x, y): potential of x relative to z when unit current enters at y
  /// and leaves at z. Equals l+_zz - l+_zx - l+_zy + l+_xy.
  Rational voltage(VertexId z, VertexId x, VertexId y) const;

 private:
  const Rational& entry(VertexId a, VertexId b) const;

  Multigraph graph_;
  RationalMatrix laplacian_;
  RationalMatrix pseudo_inverse_;
};

/// Floating-point mirror of Network::resistance: the same algorithm in
/// extended (long double) precision, rounded to double on return.
double resistance_float(const Multigraph& g, VertexId s, VertexId t);

/// Central difference (r(L_e + h) - r(L_e - h)) / 2h on the float mirror.
double finite_difference_derivative(const Multigraph& g, EdgeId e, VertexId s, VertexId t,
                                    double step = 1e-6);

}  // namespace kirchhoff
