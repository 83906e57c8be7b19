#include "kirchhoff/families.hpp"

#include <stdexcept>

namespace kirchhoff {

namespace {

VertexId vid(std::size_t i) { return VertexId{static_cast<std::uint32_t>(i)}; }

Multigraph with_vertices(std::size_t n) {
  Multigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(vid(i));
  return g;
}

void add_apex(Multigraph& g, std::size_t rim, std::size_t a) {
  const VertexId apex = vid(rim);
  g.add_vertex(apex);
  for (std::size_t i = 0; i < rim; ++i) {
    for (std::size_t k = 0; k < a; ++k) g.add_edge(apex, vid(i));
  }
}

}  // namespace

Multigraph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  Multigraph g = with_vertices(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(vid(i), vid(i + 1));
  return g;
}

Multigraph cycle_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cycle needs at least one vertex");
  Multigraph g = with_vertices(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(vid(i), vid((i + 1) % n));
  return g;
}

Multigraph banana_graph(std::size_t s) {
  Multigraph g = with_vertices(2);
  for (std::size_t i = 0; i < s; ++i) g.add_edge(vid(0), vid(1));
  return g;
}

Multigraph complete_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
  Multigraph g = with_vertices(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(vid(i), vid(j));
  }
  return g;
}

Multigraph fan_graph(std::size_t n, std::size_t a) {
  if (a == 0) throw std::invalid_argument("fan multiplicity must be at least 1");
  Multigraph g = path_graph(n);
  add_apex(g, n, a);
  return g;
}

Multigraph wheel_graph(std::size_t n, std::size_t a) {
  if (a == 0) throw std::invalid_argument("wheel multiplicity must be at least 1");
  Multigraph g = cycle_graph(n);
  add_apex(g, n, a);
  return g;
}

}  // namespace kirchhoff
