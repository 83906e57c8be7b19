#include "kirchhoff/network.hpp"

#include <Eigen/Dense>

namespace kirchhoff {

RationalMatrix laplacian(const Multigraph& g) {
  if (!is_connected(g)) {
    throw DisconnectedGraphError("graph is disconnected");
  }
  const std::size_t n = g.vertex_count();
  RationalMatrix lap(n, n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const std::size_t a = g.index_of(e.u);
    const std::size_t b = g.index_of(e.v);
    const Rational conductance = 1 / e.length;
    lap(a, a) += conductance;
    lap(b, b) += conductance;
    lap(a, b) -= conductance;
    lap(b, a) -= conductance;
  }
  return lap;
}

RationalMatrix pseudo_inverse(const RationalMatrix& laplacian) {
  if (!laplacian.is_square()) {
    throw DimensionError("Laplacian must be square");
  }
  const std::size_t n = laplacian.rows();
  const RationalMatrix mean =
      make_rational(1, BigInt(static_cast<unsigned long>(n))) * RationalMatrix::ones(n, n);
  try {
    return invert(laplacian - mean) + mean;
  } catch (const SingularMatrixError& err) {
    throw DisconnectedGraphError(std::string("Laplacian has a nullity above one (") + err.what() +
                                 ")");
  }
}

Network::Network(Multigraph graph)
    : graph_(std::move(graph)),
      laplacian_(kirchhoff::laplacian(graph_)),
      pseudo_inverse_(kirchhoff::pseudo_inverse(laplacian_)) {}

const Rational& Network::entry(VertexId a, VertexId b) const {
  return pseudo_inverse_(graph_.index_of(a), graph_.index_of(b));
}

Rational Network::resistance(VertexId p, VertexId q) const {
  return entry(p, p) - 2 * entry(p, q) + entry(q, q);
}

Rational Network::voltage(VertexId z, VertexId x, VertexId y) const {
  return entry(z, z) - entry(z, x) - entry(z, y) + entry(x, y);
}

namespace {

using FloatMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

long double float_resistance(const Multigraph& g, VertexId s, VertexId t, const Edge* changed,
                             long double changed_length) {
  if (!is_connected(g)) {
    throw DisconnectedGraphError("graph is disconnected");
  }
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  FloatMatrix lap = FloatMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const auto a = static_cast<Eigen::Index>(g.index_of(e.u));
    const auto b = static_cast<Eigen::Index>(g.index_of(e.v));
    const long double length = (changed != nullptr && changed->id == e.id)
                                   ? changed_length
                                   : static_cast<long double>(e.length.get_d());
    const long double conductance = 1.0L / length;
    lap(a, a) += conductance;
    lap(b, b) += conductance;
    lap(a, b) -= conductance;
    lap(b, a) -= conductance;
  }
  const FloatMatrix mean = FloatMatrix::Constant(n, n, 1.0L / static_cast<long double>(n));
  const FloatMatrix plus = (lap - mean).partialPivLu().inverse() + mean;
  const auto i = static_cast<Eigen::Index>(g.index_of(s));
  const auto j = static_cast<Eigen::Index>(g.index_of(t));
  return plus(i, i) - 2.0L * plus(i, j) + plus(j, j);
}

}  // namespace

double resistance_float(const Multigraph& g, VertexId s, VertexId t) {
  return static_cast<double>(float_resistance(g, s, t, nullptr, 0.0L));
}

double finite_difference_derivative(const Multigraph& g, EdgeId e, VertexId s, VertexId t,
                                    double step) {
  const Edge& edge = g.edge(e);
  const long double length = edge.length.get_d();
  const long double h = step;
  const long double up = float_resistance(g, s, t, &edge, length + h);
  const long double down = float_resistance(g, s, t, &edge, length - h);
  return static_cast<double>((up - down) / (2.0L * h));
}

}  // namespace kirchhoff
