#pragma once

// Spanning-tree counts of multigraphs and the identities relating the counts
// of a graph, its surgeries and its pieces.
//
// Counting ignores edge lengths and self-loops. A graph with one vertex has
// exactly one spanning tree; a disconnected graph has none.
//
// Formula evaluators use the bookkeeping convention t(G_xx) = 0: any count
// whose identification names the same vertex twice is zero. The convention
// is applied here and never by identify(), where a singleton group is a no-op.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "kirchhoff/exact.hpp"
#include "kirchhoff/graph.hpp"

namespace kirchhoff {

using TreeCount = BigInt;

/// Determinant of the reduced Laplacian. Throws PreconditionError on an
/// empty vertex set.
TreeCount count_matrix_tree(const Multigraph& g);

/// t(G) = t(G/e) + t(G - e), applied one parallel class at a time.
TreeCount count_deletion_contraction(const Multigraph& g);

/// Brute force over (n-1)-edge subsets. Throws PreconditionError if the
/// graph has more than `max_edges` edges.
TreeCount count_enumeration(const Multigraph& g, std::size_t max_edges = 20);

/// t(identify(G, P)).
TreeCount count_identified(const Multigraph& g, const VertexPartition& partition);

/// t(G_{x1 x2 ...}) with the zero convention for repeated vertices.
TreeCount count_merged(const Multigraph& g, const std::vector<VertexId>& group);

/// t(G_{pq,st}), computed as the identification of s and t inside G_pq. Zero
/// when p = q or when s and t already coincide in G_pq.
TreeCount count_double_merged(const Multigraph& g, VertexId p, VertexId q, VertexId s,
                              VertexId t);

/// r(p,q) = t(G_pq)/t(G). Requires a connected graph with unit lengths.
Rational resistance_from_trees(const Multigraph& g, VertexId p, VertexId q);

/// j_p(q,s) = (t(G_pq) + t(G_ps) - t(G_qs)) / (2 t(G)). Same requirements.
Rational voltage_from_trees(const Multigraph& g, VertexId p, VertexId q, VertexId s);

struct AveragingResult {
  TreeCount count;
  /// Sum over edges of t(G/e_i) or t(G - e_i).
  TreeCount edge_sum;
  BigInt residual;
};

/// residual = (n - 1) t(G) - sum_i t(G/e_i), with t(G/e) = 0 for a self-loop.
AveragingResult averaging_contractions(const Multigraph& g);

/// residual = g t(G) - sum_i t(G - e_i), g the genus. Throws
/// PreconditionError if G has a bridge.
AveragingResult averaging_deletions(const Multigraph& g);

/// Pieces sharing single cut vertices: product of counts.
TreeCount union_cut_vertex(const std::vector<TreeCount>& parts);

/// Two pieces glued at p and q: t1 t2pq + t2 t1pq.
TreeCount union_two_vertices(const TreeCount& t1, const TreeCount& t1pq, const TreeCount& t2,
                             const TreeCount& t2pq);

/// k pieces glued at p and q: prod_j t_jpq * sum_i t_i / t_ipq, evaluated as
/// sum_i t_i prod_{j != i} t_jpq. Every t_ipq must be positive.
TreeCount union_k_banana(const std::vector<TreeCount>& t, const std::vector<TreeCount>& tpq);

/// Edges of C_n replaced by pieces G_i at (s_i, t_i):
/// prod_i t_i * sum_i t_ist / t_i. Every t_i must be positive.
TreeCount union_cycle_replacement(const std::vector<TreeCount>& t,
                                  const std::vector<TreeCount>& tst);

/// Counts of a two-terminal piece: t(G) and t(G_st).
struct PieceCount {
  TreeCount t;
  TreeCount t_st;
};

/// Banana B_k whose i-th edge is a chain of pieces paths[i][0], paths[i][1], ...
TreeCount union_banana_of_paths(const std::vector<std::vector<PieceCount>>& paths);

/// Uniform case: k chains of n copies of H.
/// k n^{k-1} t(H)^{(n-1)(k-1)+n} t(H_st)^{k-1}.
TreeCount union_banana_of_paths_uniform(std::size_t k, std::size_t n, const TreeCount& t,
                                        const TreeCount& t_st);

/// Counts of one side of a three-vertex gluing at p, q, s.
struct TripleSide {
  TreeCount t;
  TreeCount t_ps;   // a
  TreeCount t_pq;   // b
  TreeCount t_qs;   // c
  TreeCount t_pqs;
};

/// t1 t2pqs + t2 t1pqs + [a1(-a2+b2+c2) + b1(a2-b2+c2) + c1(a2+b2-c2)] / 2.
/// Throws PreconditionError if the bracket is odd.
TreeCount union_three_vertices(const TripleSide& first, const TripleSide& second);

/// Two copies of one graph glued at the same p, q, s: 4 t(G1) t(G1_pqs).
TreeCount union_three_vertices_identical(const TreeCount& t, const TreeCount& t_pqs);

/// One term of the vertex deletion expansion.
struct ExpansionTerm {
  std::vector<VertexId> subset;
  BigInt coefficient;
  TreeCount count;
};

struct VertexDeletionExpansion {
  TreeCount total;
  std::vector<ExpansionTerm> terms;
};

/// t(G) = sum over nonempty S of N(u) of (prod_{i in S} a_i) t(H_S), H = G - u,
/// where singleton S contributes a_i t(H). Throws PreconditionError if G is
/// disconnected or u is a cut vertex.
VertexDeletionExpansion vertex_deletion_count(const Multigraph& g, VertexId u);

/// Same sum from raw numbers: counts[mask] = t(H_S) for the subset S encoded
/// by mask over a, with every singleton mask holding t(H).
TreeCount vertex_deletion_formula(const std::vector<BigInt>& a,
                                  const std::vector<TreeCount>& counts);

/// (a + b) t(H) + a b t(H_pq).
TreeCount vertex_deletion_two(const BigInt& a, const BigInt& b, const TreeCount& h,
                              const TreeCount& h_pq);

/// (a + b + c) t(H) + a b t(H_pq) + a c t(H_ps) + b c t(H_qs) + a b c t(H_pqs),
/// for neighbours p, q, s joined by a, b, c edges.
TreeCount vertex_deletion_three(const BigInt& a, const BigInt& b, const BigInt& c,
                                const TreeCount& h, const TreeCount& h_pq, const TreeCount& h_ps,
                                const TreeCount& h_qs, const TreeCount& h_pqs);

/// A vertex whose deletion leaves the graph connected; nullopt if none.
std::optional<VertexId> find_non_cut_vertex(const Multigraph& g);

/// One spoke of a star augmentation: `count` new edges from the anchor to `target`.
struct Spoke {
  VertexId target;
  std::size_t count = 1;
};

/// H with the spokes added as unit edges.
Multigraph star_augment(const Multigraph& h, VertexId anchor, const std::vector<Spoke>& spokes);

/// t(H) + sum over S containing the anchor, |S| >= 2, of
/// (prod_{i in S - anchor} a_i) t(H_S). Throws PreconditionError for an
/// unknown, repeated or anchor-equal target or a zero spoke count.
TreeCount star_augmentation_count(const Multigraph& h, VertexId anchor,
                                  const std::vector<Spoke>& spokes);

/// t(G) t(G_{pq,st}) - t(G_st) t(G_pq)
///   + [t(G_ps) - t(G_qs) - t(G_pt) + t(G_qt)]^2 / 4.
Rational identification_quadratic_residual(const Multigraph& g, VertexId p, VertexId q,
                                           VertexId s, VertexId t);

/// t(G) t(G_pqs) - t(G_ps) t(G_pq) + [t(G_ps) - t(G_qs) + t(G_pq)]^2 / 4.
Rational identification_three_point_residual(const Multigraph& g, VertexId p, VertexId q,
                                             VertexId s);

/// t(G) t(G/e_st) - t(G_st) t(G/e) + [t(G_ps) - t(G_qs) - t(G_pt) + t(G_qt)]^2 / 4
/// with e = (p, q).
Rational contraction_identity_residual(const Multigraph& g, EdgeId e, VertexId s, VertexId t);

/// t(G) t((G-e)_st) - t(G_st) t(G-e) - [t(G_ps) - t(G_qs) - t(G_pt) + t(G_qt)]^2 / 4.
Rational deletion_identity_residual(const Multigraph& g, EdgeId e, VertexId s, VertexId t);

/// t(G_st) - k t(G) - (1/(4 t(G))) sum over non-bridges of
/// [t(G_ps) - t(G_pt) - t(G_qs) + t(G_qt)]^2, k the number of bridges
/// separating s from t. Requires G connected.
Rational spanning_tree_euler_residual_bridges(const Multigraph& g, VertexId s, VertexId t);

/// Same with the sum over every edge and no bridge term.
Rational spanning_tree_euler_residual(const Multigraph& g, VertexId s, VertexId t);

enum class Family { path, cycle, banana, complete, fan, wheel };

/// Family from its name ("path", "cycle", ...); nullopt if unknown.
std::optional<Family> family_from_name(const std::string& name);

/// Member of a family; `a` is the spoke multiplicity of fans and wheels and
/// is ignored otherwise.
Multigraph family_graph(Family family, std::size_t n, std::size_t a = 1);

/// t(P_n) = 1, t(C_n) = n, t(B_n) = n, t(K_n) = n^{n-2}, t(Fan_n) = a B_{n-1}(a),
/// t(W_n) = a W_{n-1}(a). Throws PreconditionError for n = 0 or a = 0.
TreeCount closed_form(Family family, std::size_t n, std::size_t a = 1);

/// A graph with two marked terminals.
struct TwoTerminal {
  Multigraph graph;
  VertexId s;
  VertexId t;
};

/// Pieces joined end to end: t of one piece is glued to s of the next.
TwoTerminal chain_graph(const std::vector<TwoTerminal>& pieces);

/// Pieces glued in parallel: all s together, all t together.
TwoTerminal parallel_graph(const std::vector<TwoTerminal>& pieces);

/// Pieces around a cycle: t of piece i is glued to s of piece i + 1 (mod n).
Multigraph ring_graph(const std::vector<TwoTerminal>& pieces);

}  // namespace kirchhoff
