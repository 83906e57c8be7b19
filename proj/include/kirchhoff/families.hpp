#pragma once

// Standard graph families with unit edge lengths. Vertices are numbered
// 0..n-1 along the path or cycle; fan and wheel apexes get id n.

#include <cstddef>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

/// P_n: n vertices, n - 1 edges.
Multigraph path_graph(std::size_t n);
/// C_n. C_1 is a vertex with one loop; C_2 is two vertices joined twice.
Multigraph cycle_graph(std::size_t n);
/// B_s: two vertices joined by s parallel edges.
Multigraph banana_graph(std::size_t s);
Multigraph complete_graph(std::size_t n);
/// P_n plus an apex joined to every path vertex by `a` parallel edges.
Multigraph fan_graph(std::size_t n, std::size_t a = 1);
/// C_n plus an apex joined to every cycle vertex by `a` parallel edges.
Multigraph wheel_graph(std::size_t n, std::size_t a = 1);

inline VertexId apex_of(std::size_t n) { return VertexId{static_cast<std::uint32_t>(n)}; }

}  // namespace kirchhoff
