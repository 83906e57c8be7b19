#pragma once

// Weighted multigraphs and the surgery operations applied to them.
//
// Vertex and edge ids are opaque and survive every surgery unchanged; a
// merged group of vertices receives a fresh id which is reported through the
// RenameMap returned alongside the new graph. Surgery never mutates its input.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kirchhoff/exact.hpp"

namespace kirchhoff {

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Rational length;

  bool is_loop() const { return u == v; }
  /// The endpoint opposite to `end` (for a loop, `end` itself).
  VertexId other(VertexId end) const { return end == u ? v : u; }
};

class Multigraph {
 public:
  Multigraph() = default;

  /// Adds a vertex with a fresh id.
  VertexId add_vertex();
  /// Adds a vertex with the given id; no-op if it already exists.
  void add_vertex(VertexId id);
  /// Adds an edge with a fresh id. Endpoints must exist; length must be > 0.
  EdgeId add_edge(VertexId u, VertexId v, const Rational& length = 1);
  /// Adds an edge with an explicit id; throws if the id is taken.
  void add_edge(EdgeId id, VertexId u, VertexId v, const Rational& length = 1);

  /// Sorted by id.
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  /// Sorted by id.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(VertexId id) const;
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  /// Position of `id` in vertices(); throws UnknownVertexError.
  std::size_t index_of(VertexId id) const;

  VertexId next_vertex_id() const;
  EdgeId next_edge_id() const;

  Rational total_length() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

/// Old vertex id -> id in the derived graph, for every vertex of the source.
using RenameMap = std::map<VertexId, VertexId>;

struct SurgeryResult {
  Multigraph graph;
  RenameMap rename;

  VertexId image(VertexId v) const;
};

/// Disjoint vertex groups to merge; vertices outside every group stay put.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<std::vector<VertexId>> groups) : groups_(std::move(groups)) {}

  const std::vector<std::vector<VertexId>>& groups() const noexcept { return groups_; }
  void add_group(std::vector<VertexId> group) { groups_.push_back(std::move(group)); }

  /// Throws UnknownVertexError or InvalidPartitionError.
  void validate(const Multigraph& g) const;

 private:
  std::vector<std::vector<VertexId>> groups_;
};

Multigraph delete_edge(const Multigraph& g, EdgeId e);

/// Collapses the endpoints of `e` into one fresh vertex and drops `e`. Edges
/// parallel to `e` become self-loops. Contracting a self-loop deletes it.
SurgeryResult contract_edge(const Multigraph& g, EdgeId e);

/// Merges each group with two or more members into a fresh vertex. Edges
/// inside a group become self-loops; singleton groups are no-ops.
SurgeryResult identify(const Multigraph& g, const VertexPartition& partition);

/// Removes `u` together with every edge incident to it.
Multigraph delete_vertex(const Multigraph& g, VertexId u);

/// True iff removing `e` separates its endpoints. Self-loops are never bridges.
bool is_bridge(const Multigraph& g, EdgeId e);

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// True iff x and y lie in the same component of g.
bool connected(const Multigraph& g, VertexId x, VertexId y);

/// Cyclomatic number m - n + 1 (for a connected graph).
long genus(const Multigraph& g);

/// Distinct neighbours of u with the number of joining edges; loops excluded.
std::vector<std::pair<VertexId, std::size_t>> neighbors_with_multiplicity(const Multigraph& g,
                                                                          VertexId u);

/// Copy of g with the length of e replaced.
Multigraph with_length(const Multigraph& g, EdgeId e, const Rational& length);
Multigraph with_unit_lengths(const Multigraph& g);
bool has_unit_lengths(const Multigraph& g);

/// Result of gluing a second graph onto a first one.
struct GlueResult {
  Multigraph graph;
  /// Vertex of the second graph -> vertex of the glued graph.
  RenameMap second;
};

/// Disjoint union of `first` and `second` in which each pair (a, b) of
/// `shared` makes vertex b of `second` the same vertex as a of `first`.
GlueResult glue(const Multigraph& first, const Multigraph& second,
                const std::vector<std::pair<VertexId, VertexId>>& shared);

/// Canonical one-line description used for hashing and golden output.
std::string canonical_text(const Multigraph& g);
/// 64-bit FNV-1a of canonical_text(), as 16 hex digits.
std::string graph_hash(const Multigraph& g);

}  // namespace kirchhoff
