#include "kirchhoff/spantree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kirchhoff/families.hpp"
#include "kirchhoff/polyseq.hpp"

namespace kirchhoff {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

using Multiplicity = std::vector<std::vector<std::uint64_t>>;

Multiplicity multiplicity_matrix(const Multigraph& g) {
  Multiplicity m(g.vertex_count(), std::vector<std::uint64_t>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const std::size_t a = g.index_of(e.u);
    const std::size_t b = g.index_of(e.v);
    m[a][b] += 1;
    m[b][a] += 1;
  }
  return m;
}

bool matrix_connected(const Multiplicity& m) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (m[v][w] > 0 && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// Merges w into v and drops the loops this creates.
Multiplicity merge(const Multiplicity& m, std::size_t v, std::size_t w) {
  const std::size_t n = m.size();
  Multiplicity out;
  out.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == w) continue;
    std::vector<std::uint64_t> row;
    row.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == w) continue;
      std::uint64_t value = m[i][j];
      if (i == v) value += m[w][j];
      if (j == v) value += m[i][w];
      if (i == v && j == v) value = 0;
      row.push_back(value);
    }
    out.push_back(std::move(row));
  }
  return out;
}

TreeCount deletion_contraction(const Multiplicity& m) {
  const std::size_t n = m.size();
  if (n == 1) return 1;
  if (!matrix_connected(m)) return 0;

  std::size_t v = 0;
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t degree = std::accumulate(m[i].begin(), m[i].end(), std::uint64_t{0});
    if (degree > best) {
      best = degree;
      v = i;
    }
  }
  std::size_t w = 0;
  while (m[v][w] == 0) ++w;

  // Contracting any one of the k parallel edges turns the others into loops,
  // so the class contributes k t(G/vw); deleting the whole class leaves G - vw.
  const std::uint64_t k = m[v][w];
  TreeCount total = BigInt(static_cast<unsigned long>(k)) * deletion_contraction(merge(m, v, w));
  Multiplicity deleted = m;
  deleted[v][w] = 0;
  deleted[w][v] = 0;
  total += deletion_contraction(deleted);
  return total;
}

void require_nonempty(const Multigraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");
}

void require_unit_connected(const Multigraph& g) {
  if (!has_unit_lengths(g)) {
    throw PreconditionError("tree-count formulas for r and j require unit edge lengths");
  }
  if (!is_connected(g)) throw DisconnectedGraphError("graph is disconnected");
}

// Lazily cached t(G_xy) for one graph.
class PairCounts {
 public:
  explicit PairCounts(const Multigraph& g) : g_(g) {}

  const TreeCount& operator()(VertexId x, VertexId y) {
    const auto key = std::minmax(x, y);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, count_merged(g_, {x, y})).first;
    return it->second;
  }

 private:
  const Multigraph& g_;
  std::map<std::pair<VertexId, VertexId>, TreeCount> cache_;
};

// t(G_ps) - t(G_qs) - t(G_pt) + t(G_qt).
BigInt cross_difference(PairCounts& pairs, VertexId p, VertexId q, VertexId s, VertexId t) {
  return pairs(p, s) - pairs(q, s) - pairs(p, t) + pairs(q, t);
}

Rational quarter_square(const BigInt& x) { return make_rational(x * x, 4); }

TreeCount product(const std::vector<TreeCount>& values) {
  TreeCount out = 1;
  for (const auto& v : values) out *= v;
  return out;
}

// sum_i numerators[i] prod_{j != i} others[j].
TreeCount cross_sum(const std::vector<TreeCount>& numerators, const std::vector<TreeCount>& others) {
  TreeCount total = 0;
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    TreeCount term = numerators[i];
    for (std::size_t j = 0; j < others.size(); ++j) {
      if (j != i) term *= others[j];
    }
    total += term;
  }
  return total;
}

void require_positive(const std::vector<TreeCount>& values, const char* what) {
  for (const auto& v : values) {
    if (v <= 0) throw PreconditionError(std::string(what) + " must be positive");
  }
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::vector<VertexId> subset_of(const std::vector<VertexId>& items, std::size_t mask) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(items[i]);
  }
  return out;
}

}  // namespace

TreeCount count_matrix_tree(const Multigraph& g) {
  require_nonempty(g);
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  const Multiplicity m = multiplicity_matrix(g);
  const std::size_t r = n - 1;
  std::vector<BigInt> reduced(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t degree = 0;
    for (std::size_t j = 0; j < n; ++j) degree += m[i][j];
    for (std::size_t j = 0; j < r; ++j) {
      reduced[i * r + j] =
          i == j ? BigInt(static_cast<unsigned long>(degree))
                 : BigInt(-static_cast<long>(m[i][j]));
    }
  }
  return det_bareiss(std::move(reduced), r);
}

TreeCount count_deletion_contraction(const Multigraph& g) {
  require_nonempty(g);
  return deletion_contraction(multiplicity_matrix(g));
}

TreeCount count_enumeration(const Multigraph& g, std::size_t max_edges) {
  require_nonempty(g);
  if (g.edge_count() > max_edges) {
    throw PreconditionError("enumeration is limited to " + std::to_string(max_edges) + " edges");
  }
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) ends.emplace_back(g.index_of(e.u), g.index_of(e.v));
  }
  const std::size_t k = n - 1;
  if (ends.size() < k) return 0;

  TreeCount count = 0;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    UnionFind sets(n);
    bool forest = true;
    for (std::size_t i : pick) {
      if (!sets.unite(ends[i].first, ends[i].second)) {
        forest = false;
        break;
      }
    }
    if (forest) count += 1;

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == ends.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

TreeCount count_identified(const Multigraph& g, const VertexPartition& partition) {
  return count_matrix_tree(identify(g, partition).graph);
}

TreeCount count_merged(const Multigraph& g, const std::vector<VertexId>& group) {
  for (VertexId v : group) g.index_of(v);
  const std::set<VertexId> distinct(group.begin(), group.end());
  if (distinct.size() != group.size()) return 0;
  if (group.size() < 2) return count_matrix_tree(g);
  return count_identified(g, VertexPartition({group}));
}

TreeCount count_double_merged(const Multigraph& g, VertexId p, VertexId q, VertexId s,
                              VertexId t) {
  for (VertexId v : {p, q, s, t}) g.index_of(v);
  if (p == q) return 0;
  const SurgeryResult first = identify(g, VertexPartition({{p, q}}));
  return count_merged(first.graph, {first.image(s), first.image(t)});
}

Rational resistance_from_trees(const Multigraph& g, VertexId p, VertexId q) {
  require_unit_connected(g);
  return make_rational(count_merged(g, {p, q}), count_matrix_tree(g));
}

Rational voltage_from_trees(const Multigraph& g, VertexId p, VertexId q, VertexId s) {
  require_unit_connected(g);
  const BigInt numerator = count_merged(g, {p, q}) + count_merged(g, {p, s}) - count_merged(g, {q, s});
  return make_rational(numerator, 2 * count_matrix_tree(g));
}

AveragingResult averaging_contractions(const Multigraph& g) {
  AveragingResult out;
  out.count = count_matrix_tree(g);
  out.edge_sum = 0;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    out.edge_sum += count_matrix_tree(contract_edge(g, e.id).graph);
  }
  out.residual = BigInt(static_cast<unsigned long>(g.vertex_count() - 1)) * out.count - out.edge_sum;
  return out;
}

AveragingResult averaging_deletions(const Multigraph& g) {
  for (const auto& e : g.edges()) {
    if (is_bridge(g, e.id)) {
      throw PreconditionError("graph has a bridge; the deletion average requires a bridgeless graph");
    }
  }
  AveragingResult out;
  out.count = count_matrix_tree(g);
  out.edge_sum = 0;
  for (const auto& e : g.edges()) out.edge_sum += count_matrix_tree(delete_edge(g, e.id));
  out.residual = BigInt(genus(g)) * out.count - out.edge_sum;
  return out;
}

TreeCount union_cut_vertex(const std::vector<TreeCount>& parts) {
  if (parts.empty()) throw PreconditionError("union of no pieces");
  return product(parts);
}

TreeCount union_two_vertices(const TreeCount& t1, const TreeCount& t1pq, const TreeCount& t2,
                             const TreeCount& t2pq) {
  return t1 * t2pq + t2 * t1pq;
}

TreeCount union_k_banana(const std::vector<TreeCount>& t, const std::vector<TreeCount>& tpq) {
  if (t.empty() || t.size() != tpq.size()) {
    throw PreconditionError("union_k_banana needs matching nonempty count lists");
  }
  require_positive(tpq, "t(G_i,pq)");
  return cross_sum(t, tpq);
}

TreeCount union_cycle_replacement(const std::vector<TreeCount>& t,
                                  const std::vector<TreeCount>& tst) {
  if (t.empty() || t.size() != tst.size()) {
    throw PreconditionError("union_cycle_replacement needs matching nonempty count lists");
  }
  require_positive(t, "t(G_i)");
  return cross_sum(tst, t);
}

TreeCount union_banana_of_paths(const std::vector<std::vector<PieceCount>>& paths) {
  std::vector<TreeCount> t;
  std::vector<TreeCount> tpq;
  for (const auto& path : paths) {
    std::vector<TreeCount> pieces;
    std::vector<TreeCount> pieces_st;
    for (const auto& piece : path) {
      pieces.push_back(piece.t);
      pieces_st.push_back(piece.t_st);
    }
    t.push_back(union_cut_vertex(pieces));
    tpq.push_back(union_cycle_replacement(pieces, pieces_st));
  }
  return union_k_banana(t, tpq);
}

TreeCount union_banana_of_paths_uniform(std::size_t k, std::size_t n, const TreeCount& t,
                                        const TreeCount& t_st) {
  if (k == 0 || n == 0) throw PreconditionError("k and n must be positive");
  const BigInt kk = static_cast<unsigned long>(k);
  const BigInt nn = static_cast<unsigned long>(n);
  return kk * power(nn, k - 1) * power(t, (n - 1) * (k - 1) + n) * power(t_st, k - 1);
}

TreeCount union_three_vertices(const TripleSide& first, const TripleSide& second) {
  const BigInt& a1 = first.t_ps;
  const BigInt& b1 = first.t_pq;
  const BigInt& c1 = first.t_qs;
  const BigInt& a2 = second.t_ps;
  const BigInt& b2 = second.t_pq;
  const BigInt& c2 = second.t_qs;
  const BigInt bracket = a1 * (-a2 + b2 + c2) + b1 * (a2 - b2 + c2) + c1 * (a2 + b2 - c2);
  if (bracket % 2 != 0) {
    throw PreconditionError("inconsistent pair counts: bracket " + bracket.get_str() + " is odd");
  }
  return first.t * second.t_pqs + second.t * first.t_pqs + bracket / 2;
}

TreeCount union_three_vertices_identical(const TreeCount& t, const TreeCount& t_pqs) {
  return 4 * t * t_pqs;
}

VertexDeletionExpansion vertex_deletion_count(const Multigraph& g, VertexId u) {
  g.index_of(u);
  if (!is_connected(g)) throw DisconnectedGraphError("graph is disconnected");
  if (g.vertex_count() == 1) return {1, {}};
  const Multigraph h = delete_vertex(g, u);
  if (!is_connected(h)) {
    throw PreconditionError("vertex " + std::to_string(u.value) +
                            " is a cut vertex; the deletion expansion requires G - u connected");
  }
  std::vector<VertexId> neighbours;
  std::vector<BigInt> a;
  for (const auto& [v, count] : neighbors_with_multiplicity(g, u)) {
    neighbours.push_back(v);
    a.emplace_back(static_cast<unsigned long>(count));
  }
  VertexDeletionExpansion out{0, {}};
  for (std::size_t mask = 1; mask < (std::size_t{1} << neighbours.size()); ++mask) {
    ExpansionTerm term{subset_of(neighbours, mask), 1, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((mask >> i) & 1U) term.coefficient *= a[i];
    }
    term.count = count_merged(h, term.subset);
    out.total += term.coefficient * term.count;
    out.terms.push_back(std::move(term));
  }
  return out;
}

TreeCount vertex_deletion_formula(const std::vector<BigInt>& a,
                                  const std::vector<TreeCount>& counts) {
  if (counts.size() != (std::size_t{1} << a.size())) {
    throw PreconditionError("need one count per subset of the neighbours");
  }
  TreeCount total = 0;
  for (std::size_t mask = 1; mask < counts.size(); ++mask) {
    BigInt coefficient = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((mask >> i) & 1U) coefficient *= a[i];
    }
    total += coefficient * counts[mask];
  }
  return total;
}

TreeCount vertex_deletion_two(const BigInt& a, const BigInt& b, const TreeCount& h,
                              const TreeCount& h_pq) {
  return (a + b) * h + a * b * h_pq;
}

TreeCount vertex_deletion_three(const BigInt& a, const BigInt& b, const BigInt& c,
                                const TreeCount& h, const TreeCount& h_pq, const TreeCount& h_ps,
                                const TreeCount& h_qs, const TreeCount& h_pqs) {
  return (a + b + c) * h + a * b * h_pq + a * c * h_ps + b * c * h_qs + a * b * c * h_pqs;
}

std::optional<VertexId> find_non_cut_vertex(const Multigraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) return std::nullopt;
  if (g.vertex_count() == 1) return g.vertices().front();
  for (VertexId v : g.vertices()) {
    if (is_connected(delete_vertex(g, v))) return v;
  }
  return std::nullopt;
}

Multigraph star_augment(const Multigraph& h, VertexId anchor, const std::vector<Spoke>& spokes) {
  h.index_of(anchor);
  Multigraph out = h;
  for (const auto& spoke : spokes) {
    for (std::size_t i = 0; i < spoke.count; ++i) out.add_edge(anchor, spoke.target);
  }
  return out;
}

TreeCount star_augmentation_count(const Multigraph& h, VertexId anchor,
                                  const std::vector<Spoke>& spokes) {
  h.index_of(anchor);
  std::set<VertexId> seen;
  std::vector<VertexId> targets;
  for (const auto& spoke : spokes) {
    h.index_of(spoke.target);
    if (spoke.target == anchor || !seen.insert(spoke.target).second || spoke.count == 0) {
      throw PreconditionError("spoke targets must be distinct, differ from the anchor and carry edges");
    }
    targets.push_back(spoke.target);
  }
  TreeCount total = count_matrix_tree(h);
  for (std::size_t mask = 1; mask < (std::size_t{1} << targets.size()); ++mask) {
    std::vector<VertexId> group{anchor};
    BigInt coefficient = 1;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if ((mask >> i) & 1U) {
        group.push_back(targets[i]);
        coefficient *= static_cast<unsigned long>(spokes[i].count);
      }
    }
    total += coefficient * count_merged(h, group);
  }
  return total;
}

Rational identification_quadratic_residual(const Multigraph& g, VertexId p, VertexId q,
                                           VertexId s, VertexId t) {
  PairCounts pairs(g);
  const TreeCount whole = count_matrix_tree(g);
  const BigInt lhs = whole * count_double_merged(g, p, q, s, t);
  return Rational(lhs - pairs(s, t) * pairs(p, q)) + quarter_square(cross_difference(pairs, p, q, s, t));
}

Rational identification_three_point_residual(const Multigraph& g, VertexId p, VertexId q,
                                             VertexId s) {
  PairCounts pairs(g);
  const BigInt lhs = count_matrix_tree(g) * count_merged(g, {p, q, s});
  const BigInt bracket = pairs(p, s) - pairs(q, s) + pairs(p, q);
  return Rational(lhs - pairs(p, s) * pairs(p, q)) + quarter_square(bracket);
}

Rational contraction_identity_residual(const Multigraph& g, EdgeId e, VertexId s, VertexId t) {
  const Edge& edge = g.edge(e);
  g.index_of(s);
  g.index_of(t);
  PairCounts pairs(g);
  TreeCount contracted = 0;
  TreeCount contracted_st = 0;
  if (!edge.is_loop()) {
    const SurgeryResult small = contract_edge(g, e);
    contracted = count_matrix_tree(small.graph);
    contracted_st = count_merged(small.graph, {small.image(s), small.image(t)});
  }
  const BigInt lhs = count_matrix_tree(g) * contracted_st;
  return Rational(lhs - pairs(s, t) * contracted) +
         quarter_square(cross_difference(pairs, edge.u, edge.v, s, t));
}

Rational deletion_identity_residual(const Multigraph& g, EdgeId e, VertexId s, VertexId t) {
  const Edge& edge = g.edge(e);
  g.index_of(s);
  g.index_of(t);
  PairCounts pairs(g);
  const Multigraph cut = delete_edge(g, e);
  const BigInt lhs = count_matrix_tree(g) * count_merged(cut, {s, t});
  return Rational(lhs - pairs(s, t) * count_matrix_tree(cut)) -
         quarter_square(cross_difference(pairs, edge.u, edge.v, s, t));
}

namespace {

Rational span_euler(const Multigraph& g, VertexId s, VertexId t, bool split_bridges) {
  g.index_of(s);
  g.index_of(t);
  if (!is_connected(g)) throw DisconnectedGraphError("graph is disconnected");
  PairCounts pairs(g);
  const TreeCount whole = count_matrix_tree(g);
  BigInt bridges = 0;
  BigInt squares = 0;
  for (const auto& e : g.edges()) {
    if (split_bridges && is_bridge(g, e.id)) {
      if (!connected(delete_edge(g, e.id), s, t)) bridges += 1;
      continue;
    }
    const BigInt d = pairs(e.u, s) - pairs(e.u, t) - pairs(e.v, s) + pairs(e.v, t);
    squares += d * d;
  }
  return Rational(pairs(s, t) - bridges * whole) - make_rational(squares, 4 * whole);
}

}  // namespace

Rational spanning_tree_euler_residual_bridges(const Multigraph& g, VertexId s, VertexId t) {
  return span_euler(g, s, t, true);
}

Rational spanning_tree_euler_residual(const Multigraph& g, VertexId s, VertexId t) {
  return span_euler(g, s, t, false);
}

std::optional<Family> family_from_name(const std::string& name) {
  static const std::map<std::string, Family> names{
      {"path", Family::path},         {"cycle", Family::cycle}, {"banana", Family::banana},
      {"complete", Family::complete}, {"fan", Family::fan},     {"wheel", Family::wheel}};
  const auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace {

void require_family_range(std::size_t n, std::size_t a) {
  if (n == 0) throw PreconditionError("family size must be at least 1");
  if (a == 0) throw PreconditionError("spoke multiplicity must be at least 1");
}

}  // namespace

Multigraph family_graph(Family family, std::size_t n, std::size_t a) {
  require_family_range(n, a);
  switch (family) {
    case Family::path: return path_graph(n);
    case Family::cycle: return cycle_graph(n);
    case Family::banana: return banana_graph(n);
    case Family::complete: return complete_graph(n);
    case Family::fan: return fan_graph(n, a);
    case Family::wheel: return wheel_graph(n, a);
  }
  throw PreconditionError("unknown family");
}

TreeCount closed_form(Family family, std::size_t n, std::size_t a) {
  require_family_range(n, a);
  const BigInt nn = static_cast<unsigned long>(n);
  const Rational aa = BigInt(static_cast<unsigned long>(a));
  switch (family) {
    case Family::path: return 1;
    case Family::cycle:
    case Family::banana: return nn;
    case Family::complete: return n <= 2 ? BigInt(1) : power(nn, n - 2);
    case Family::fan: return Rational(aa * eval(morgan_voyce(n - 1), aa)).get_num();
    case Family::wheel: return Rational(aa * eval(w_poly(n - 1), aa)).get_num();
  }
  throw PreconditionError("unknown family");
}

TwoTerminal chain_graph(const std::vector<TwoTerminal>& pieces) {
  if (pieces.empty()) throw PreconditionError("chain of no pieces");
  TwoTerminal out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const TwoTerminal& piece = pieces[i];
    GlueResult glued = glue(out.graph, piece.graph, {{out.t, piece.s}});
    out.graph = std::move(glued.graph);
    out.t = glued.second.at(piece.t);
  }
  return out;
}

TwoTerminal parallel_graph(const std::vector<TwoTerminal>& pieces) {
  if (pieces.empty()) throw PreconditionError("parallel join of no pieces");
  TwoTerminal out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const TwoTerminal& piece = pieces[i];
    out.graph = glue(out.graph, piece.graph, {{out.s, piece.s}, {out.t, piece.t}}).graph;
  }
  return out;
}

Multigraph ring_graph(const std::vector<TwoTerminal>& pieces) {
  const TwoTerminal chain = chain_graph(pieces);
  return identify(chain.graph, VertexPartition({{chain.s, chain.t}})).graph;
}

}  // namespace kirchhoff
