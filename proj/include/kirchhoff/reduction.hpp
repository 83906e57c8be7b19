#pragma once

// Two-terminal resistance by local rewrites: loop removal, parallel and
// series merges, pruning of dangling vertices and the Delta-Y transform.
// Independent of the pseudo-inverse and used as a cross-check for it.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

enum class ReductionRule { loop_drop, parallel, prune, series, delta_y };

std::string to_string(ReductionRule rule);

struct ProducedEdge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Rational length;
};

struct ReductionStep {
  ReductionRule rule;
  std::vector<EdgeId> consumed;
  std::vector<ProducedEdge> produced;
  std::vector<VertexId> removed;
  std::optional<VertexId> added;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;

  /// One line per step, e.g.
  /// "series consumed=e3,e4 produced=e9(v1,v5,3/2) removed=v2".
  std::string to_text() const;
};

struct ReductionResult {
  /// r(s, t), or nullopt when the rules stall or the step budget runs out.
  std::optional<Rational> resistance;
  ReductionTrace trace;
};

/// Applies, in order of priority: drop a self-loop (lowest id); merge the
/// parallel pair with the lowest ids; delete a non-terminal vertex of degree
/// at most one (lowest id); merge the two edges at a non-terminal vertex of
/// degree two (lowest id); Delta-Y on the lexicographically least triangle.
/// Stops at a single s-t edge. At most 10 m steps are taken.
/// Throws DisconnectedGraphError if s and t are in different components and
/// PreconditionError if s = t.
ReductionResult reduce_two_terminal(const Multigraph& g, VertexId s, VertexId t);

struct DeltaYResult {
  Multigraph graph;
  VertexId center;
  /// New edges from the center to x, y, z, where x < y < z are the triangle
  /// vertices.
  std::array<EdgeId, 3> arms;
};

/// Replaces a triangle by a star. The arm at a vertex has length equal to the
/// product of the two triangle edges meeting there over the triangle's total
/// length. Throws PreconditionError if the edges do not form a triangle.
DeltaYResult delta_y(const Multigraph& g, const std::array<EdgeId, 3>& triangle);

/// Applies every step of the trace to g.
Multigraph replay(const Multigraph& g, const ReductionTrace& trace);

}  // namespace kirchhoff
