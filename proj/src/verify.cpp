#include "kirchhoff/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include "kirchhoff/network.hpp"
#include "kirchhoff/rayleigh.hpp"
#include "kirchhoff/reduction.hpp"
#include "kirchhoff/spantree.hpp"

namespace kirchhoff {

namespace {

// Portable sampling on top of mt19937_64; the standard distributions are
// implementation-defined and would break reproducibility across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }

  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(below(items.size()))];
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

Rational random_length(Rng& rng) {
  return make_rational(static_cast<unsigned long>(rng.between(1, 5)),
                       static_cast<unsigned long>(rng.between(1, 3)));
}

Multigraph build(Rng& rng, const GraphGenSpec& spec, std::size_t n, std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 1; i < n; ++i) ends.emplace_back(i, static_cast<std::size_t>(rng.below(i)));
  while (ends.size() < m) {
    if (n == 1 || rng.chance(spec.loop_probability)) {
      const std::size_t v = static_cast<std::size_t>(rng.below(n));
      ends.emplace_back(v, v);
      continue;
    }
    std::vector<std::pair<std::size_t, std::size_t>> proper;
    for (const auto& e : ends) {
      if (e.first != e.second) proper.push_back(e);
    }
    if (!proper.empty() && rng.chance(spec.parallel_probability)) {
      ends.push_back(rng.pick(proper));
      continue;
    }
    const std::size_t u = static_cast<std::size_t>(rng.below(n));
    std::size_t v = static_cast<std::size_t>(rng.below(n - 1));
    if (v >= u) ++v;
    ends.emplace_back(u, v);
  }

  std::vector<std::uint32_t> vertex_ids(n);
  std::vector<std::uint32_t> edge_ids(m);
  for (std::size_t i = 0; i < n; ++i) vertex_ids[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < m; ++i) edge_ids[i] = static_cast<std::uint32_t>(i);
  rng.shuffle(vertex_ids);
  rng.shuffle(edge_ids);

  Multigraph g;
  for (std::uint32_t id : vertex_ids) g.add_vertex(VertexId{id});
  for (std::size_t i = 0; i < m; ++i) {
    const Rational length = spec.lengths == LengthMode::unit ? Rational(1) : random_length(rng);
    g.add_edge(EdgeId{edge_ids[i]}, VertexId{vertex_ids[ends[i].first]},
               VertexId{vertex_ids[ends[i].second]}, length);
  }
  return g;
}

}  // namespace

Multigraph generate(const GraphGenSpec& spec) {
  if (spec.min_vertices > spec.max_vertices || spec.min_edges > spec.max_edges) {
    throw PreconditionError("empty vertex or edge range");
  }
  Rng rng(spec.seed);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::size_t n = rng.between(std::max<std::size_t>(spec.min_vertices, 1), spec.max_vertices);
    const std::size_t m = rng.between(spec.min_edges, spec.max_edges);
    if (m + 1 < n) continue;
    return build(rng, spec, n, m);
  }
  throw PreconditionError("no connected graph fits the vertex and edge ranges");
}

bool SuiteResult::all_passed() const {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

std::string to_line(const IdentityReport& report) {
  return report.tag + "\t" + report.graph_hash + "\t" + report.selection + "\t" +
         to_string(report.residual) + "\t" + (report.pass ? "pass" : "fail");
}

namespace {

Rational magnitude(const Rational& x) { return x < 0 ? Rational(-x) : x; }
Rational negative_part(const Rational& x) { return x < 0 ? Rational(-x) : Rational(0); }

std::string name(VertexId v) { return std::to_string(v.value); }
std::string name(EdgeId e) { return std::to_string(e.value); }

std::string describe(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += " ";
    out += key + "=" + value;
  }
  return out;
}

class Context {
 public:
  Context(const Multigraph& graph, std::string tag, std::uint64_t seed, const SuiteOptions& options,
          SuiteResult& result)
      : rng(seed ^ fnv1a(tag)), tag_(std::move(tag)), options_(options), result_(result) {
    use_graph(graph);
  }

  // Switches the graph under test, e.g. to its unit-length copy.
  void use_graph(const Multigraph& graph) {
    graph_ = graph;
    hash_ = graph_hash(graph_);
    network_.reset();
  }

  const Multigraph& graph() const { return graph_; }

  const Network& network() {
    if (!network_) network_.emplace(graph_);
    return *network_;
  }

  void report(const std::string& selection, const Rational& residual) {
    result_.reports.push_back({tag_, hash_, selection, residual, residual == 0});
  }

  void report_with(const std::string& selection, const Rational& residual, bool pass) {
    result_.reports.push_back({tag_, hash_, selection, residual, pass});
  }

  void skip() { result_.skipped[tag_] += 1; }

  std::size_t cap() const { return options_.cap; }

  VertexId vertex() { return rng.pick(graph_.vertices()); }
  EdgeId edge() { return rng.pick(graph_.edges()).id; }

  /// All k-tuples when exhaustive and the graph is small, otherwise `cap` samples.
  std::vector<std::vector<VertexId>> vertex_tuples(std::size_t k) {
    std::vector<std::vector<VertexId>> out;
    const auto& vs = graph_.vertices();
    if (options_.exhaustive && vs.size() <= 5) {
      std::vector<std::size_t> index(k, 0);
      while (true) {
        std::vector<VertexId> tuple;
        for (std::size_t i : index) tuple.push_back(vs[i]);
        out.push_back(std::move(tuple));
        std::size_t pos = 0;
        while (pos < k && ++index[pos] == vs.size()) index[pos++] = 0;
        if (pos == k) break;
      }
      return out;
    }
    for (std::size_t c = 0; c < options_.cap; ++c) {
      std::vector<VertexId> tuple;
      for (std::size_t i = 0; i < k; ++i) tuple.push_back(vertex());
      out.push_back(std::move(tuple));
    }
    return out;
  }

  /// (edge, k vertices) selections, exhaustive over edges as well when enabled.
  std::vector<std::pair<EdgeId, std::vector<VertexId>>> edge_tuples(std::size_t k) {
    std::vector<std::pair<EdgeId, std::vector<VertexId>>> out;
    if (graph_.edge_count() == 0) return out;
    if (options_.exhaustive && graph_.vertex_count() <= 5) {
      for (const auto& tuple : vertex_tuples(k)) {
        for (const auto& e : graph_.edges()) out.emplace_back(e.id, tuple);
      }
      return out;
    }
    for (const auto& tuple : vertex_tuples(k)) out.emplace_back(edge(), tuple);
    return out;
  }

  Rng rng;

 private:
  std::string tag_;
  const SuiteOptions& options_;
  SuiteResult& result_;
  Multigraph graph_;
  std::string hash_;
  std::optional<Network> network_;
};

using Evaluator = std::function<void(Context&)>;

void eval_symmetry(Context& ctx) {
  for (const auto& v : ctx.vertex_tuples(3)) {
    ctx.report(describe({{"x", name(v[0])}, {"y", name(v[1])}, {"z", name(v[2])}}),
               symmetry_residual(ctx.network(), v[0], v[1], v[2]));
  }
}

void eval_magic(Context& ctx) {
  for (const auto& v : ctx.vertex_tuples(4)) {
    ctx.report(describe({{"p", name(v[0])}, {"q", name(v[1])}, {"s", name(v[2])}, {"t", name(v[3])}}),
               magic_residual(ctx.network(), v[0], v[1], v[2], v[3]));
  }
}

void eval_shorting(Context& ctx) {
  for (const auto& v : ctx.vertex_tuples(4)) {
    if (v[0] == v[1]) {
      ctx.skip();
      continue;
    }
    const LawDelta d = shorting_delta(ctx.network(), v[0], v[1], v[2], v[3]);
    const Rational residual = magnitude(d.residual) + negative_part(d.correction) +
                              shorting_terminal_residual(ctx.network(), v[0], v[1], v[2]);
    ctx.report(describe({{"p", name(v[0])}, {"q", name(v[1])}, {"s", name(v[2])}, {"t", name(v[3])}}),
               residual);
  }
}

std::string edge_selection(EdgeId e, VertexId s, VertexId t) {
  return describe({{"e", name(e)}, {"s", name(s)}, {"t", name(t)}});
}

void eval_cutting(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(2)) {
    if (is_bridge(ctx.graph(), e)) {
      ctx.skip();
      continue;
    }
    const LawDelta d = cutting_delta(ctx.network(), e, v[0], v[1]);
    const Rational residual = magnitude(d.residual) + negative_part(d.correction) +
                              magnitude(cutting_second_form_residual(ctx.network(), e, v[0], v[1]));
    ctx.report(edge_selection(e, v[0], v[1]), residual);
  }
}

void eval_monotonic1(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(2)) {
    const LawDelta d = contraction_delta(ctx.network(), e, v[0], v[1]);
    Rational residual = magnitude(d.residual) + negative_part(d.correction);
    if (!is_bridge(ctx.graph(), e) && !ctx.graph().edge(e).is_loop()) {
      residual += magnitude(contraction_second_form_residual(ctx.network(), e, v[0], v[1]));
    }
    ctx.report(edge_selection(e, v[0], v[1]), residual);
  }
}

void eval_monotonic2(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(2)) {
    const Rational new_length = random_length(ctx.rng);
    const LawDelta d = edge_modification_delta(ctx.network(), e, new_length, v[0], v[1]);
    const Rational shrink = ctx.graph().edge(e).length - new_length;
    const Rational residual = magnitude(d.residual) + negative_part(d.correction * shrink);
    ctx.report(edge_selection(e, v[0], v[1]) + " L'=" + to_string(new_length), residual);
  }
}

void eval_convex(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(2)) {
    if (is_bridge(ctx.graph(), e)) {
      ctx.skip();
      continue;
    }
    ctx.report(edge_selection(e, v[0], v[1]),
               magnitude(convex_combination_check(ctx.network(), e, v[0], v[1])));
  }
}

void eval_vol_transfer(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(5)) {
    const VertexId p = v[0], q = v[1], u = v[2], t = v[3], s = v[4];
    const std::string points =
        describe({{"p", name(p)}, {"q", name(q)}, {"u", name(u)}, {"t", name(t)}, {"s", name(s)}});
    if (p == q) {
      ctx.skip();
    } else {
      const Network& net = ctx.network();
      const Rational residual = voltage_transfer_shorting(net, p, q, u, t, s) +
                                magnitude(voltage_transfer_shorting_at_p(net, p, q, t, s)) +
                                magnitude(voltage_transfer_shorting_at_t(net, p, q, u, s));
      ctx.report("shorting " + points, residual);
    }
    if (is_bridge(ctx.graph(), e)) {
      ctx.skip();
    } else {
      const Network& net = ctx.network();
      const Rational residual = magnitude(voltage_transfer_cutting(net, e, u, t, s)) +
                                magnitude(voltage_transfer_contraction(net, e, u, t, s));
      ctx.report("edge " + describe({{"e", name(e)}, {"u", name(u)}, {"t", name(t)}, {"s", name(s)}}),
                 residual);
    }
  }
}

void eval_euler1(Context& ctx) {
  for (const auto& v : ctx.vertex_tuples(2)) {
    const Network& net = ctx.network();
    const Rational r = net.resistance(v[0], v[1]);
    const auto first = euler_decomposition(net, v[0], v[1]);
    const auto deleted = euler_decomposition_deleted_form(net, v[0], v[1]);
    Rational residual = magnitude(sum_contributions(first) - r) +
                        magnitude(sum_contributions(deleted) - r);
    for (const auto& term : first) residual += negative_part(term.contribution);
    for (std::size_t i = 0; i < first.size(); ++i) {
      residual += magnitude(first[i].contribution - deleted[i].contribution);
    }
    ctx.report(describe({{"s", name(v[0])}, {"t", name(v[1])}}), residual);
  }
}

void eval_euler2(Context& ctx) {
  for (const auto& v : ctx.vertex_tuples(2)) {
    const Network& net = ctx.network();
    const Rational r = net.resistance(v[0], v[1]);
    const auto first = euler_decomposition(net, v[0], v[1]);
    const auto second = euler_decomposition_resistance_only(net, v[0], v[1]);
    Rational residual = magnitude(sum_contributions(second) - r);
    for (std::size_t i = 0; i < first.size(); ++i) {
      residual += magnitude(first[i].contribution - second[i].contribution);
    }
    ctx.report(describe({{"s", name(v[0])}, {"t", name(v[1])}}), residual);
  }
}

void eval_foster(Context& ctx) {
  const Network& net = ctx.network();
  Rational total = 0;
  for (const auto& e : ctx.graph().edges()) total += net.resistance(e.u, e.v) / e.length;
  const Rational expected = BigInt(static_cast<unsigned long>(ctx.graph().vertex_count() - 1));
  ctx.report("all-edges", magnitude(total - expected));
}

void eval_derivative(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(2)) {
    const Rational exact = resistance_derivative(ctx.network(), e, v[0], v[1]);
    const double numeric = finite_difference_derivative(ctx.graph(), e, v[0], v[1]);
    const double value = exact.get_d();
    const double error = exact == 0 ? std::fabs(numeric) : std::fabs(numeric - value) / std::fabs(value);
    bool pass = error <= kDerivativeTolerance;
    if (is_bridge(ctx.graph(), e) && exact != 0 && exact != 1) pass = false;
    ctx.report_with(edge_selection(e, v[0], v[1]), Rational(error), pass);
  }
}

void use_unit_lengths(Context& ctx) {
  if (!has_unit_lengths(ctx.graph())) ctx.use_graph(with_unit_lengths(ctx.graph()));
}

void eval_tree_resistance(Context& ctx) {
  use_unit_lengths(ctx);
  for (const auto& v : ctx.vertex_tuples(2)) {
    const Rational residual =
        resistance_from_trees(ctx.graph(), v[0], v[1]) - ctx.network().resistance(v[0], v[1]);
    ctx.report(describe({{"p", name(v[0])}, {"q", name(v[1])}}), magnitude(residual));
  }
}

void eval_tree_voltage(Context& ctx) {
  use_unit_lengths(ctx);
  for (const auto& v : ctx.vertex_tuples(3)) {
    const Rational residual = voltage_from_trees(ctx.graph(), v[0], v[1], v[2]) -
                              ctx.network().voltage(v[0], v[1], v[2]);
    ctx.report(describe({{"p", name(v[0])}, {"q", name(v[1])}, {"s", name(v[2])}}), magnitude(residual));
  }
}

void eval_averaging(Context& ctx) {
  use_unit_lengths(ctx);
  const Multigraph& g = ctx.graph();
  ctx.report("contractions", magnitude(Rational(averaging_contractions(g).residual)));

  bool bridgeless = true;
  for (const auto& e : g.edges()) bridgeless = bridgeless && !is_bridge(g, e.id);
  if (bridgeless) {
    ctx.report("deletions", magnitude(Rational(averaging_deletions(g).residual)));
  } else {
    ctx.skip();
  }

  // With unit lengths, R_i/(1 + R_i) = t(G/e_i)/t(G) and 1/(1 + R_i) = t(G - e_i)/t(G).
  const TreeCount whole = count_matrix_tree(g);
  Rational residual = 0;
  for (const auto& e : g.edges()) {
    if (is_bridge(g, e.id)) continue;
    const Multigraph cut = delete_edge(g, e.id);
    const Rational detour = Network(cut).resistance(e.u, e.v);
    const TreeCount contracted = e.is_loop() ? TreeCount(0) : count_matrix_tree(contract_edge(g, e.id).graph);
    residual += magnitude(detour / (1 + detour) - make_rational(contracted, whole));
    residual += magnitude(1 / (1 + detour) - make_rational(count_matrix_tree(cut), whole));
  }
  ctx.report("edge-ratios", residual);
}

// A small random connected piece with two distinct marked vertices.
TwoTerminal random_piece(Rng& rng, std::size_t min_vertices) {
  GraphGenSpec spec;
  spec.min_vertices = min_vertices;
  spec.max_vertices = 4;
  spec.min_edges = 1;
  spec.max_edges = 5;
  spec.lengths = LengthMode::unit;
  spec.seed = rng.below(std::numeric_limits<std::uint64_t>::max());
  Multigraph g = generate(spec);
  std::vector<VertexId> vs = g.vertices();
  rng.shuffle(vs);
  return TwoTerminal{std::move(g), vs[0], vs[1]};
}

TreeCount pair_count(const TwoTerminal& piece) {
  return count_merged(piece.graph, {piece.s, piece.t});
}

Rational count_gap(const TreeCount& formula, const Multigraph& built) {
  return magnitude(Rational(formula - count_matrix_tree(built)));
}

void eval_unions(Context& ctx) {
  Rng& rng = ctx.rng;
  {
    const TwoTerminal a = random_piece(rng, 2);
    const TwoTerminal b = random_piece(rng, 2);
    const Multigraph joined = glue(a.graph, b.graph, {{a.s, b.s}}).graph;
    ctx.report("cut-vertex", count_gap(union_cut_vertex({count_matrix_tree(a.graph), count_matrix_tree(b.graph)}), joined));
  }
  {
    const TwoTerminal a = random_piece(rng, 2);
    const TwoTerminal b = random_piece(rng, 2);
    const TreeCount formula = union_two_vertices(count_matrix_tree(a.graph), pair_count(a),
                                                 count_matrix_tree(b.graph), pair_count(b));
    ctx.report("two-vertex", count_gap(formula, parallel_graph({a, b}).graph));
  }
  {
    std::vector<TwoTerminal> pieces;
    std::vector<TreeCount> t, tpq;
    for (int i = 0; i < 3; ++i) {
      pieces.push_back(random_piece(rng, 2));
      t.push_back(count_matrix_tree(pieces.back().graph));
      tpq.push_back(pair_count(pieces.back()));
    }
    ctx.report("k-banana", count_gap(union_k_banana(t, tpq), parallel_graph(pieces).graph));
  }
  {
    std::vector<TwoTerminal> pieces;
    std::vector<TreeCount> t, tst;
    for (int i = 0; i < 3; ++i) {
      pieces.push_back(random_piece(rng, 2));
      t.push_back(count_matrix_tree(pieces.back().graph));
      tst.push_back(pair_count(pieces.back()));
    }
    ctx.report("cycle", count_gap(union_cycle_replacement(t, tst), ring_graph(pieces)));
  }
  {
    std::vector<std::vector<PieceCount>> counts;
    std::vector<TwoTerminal> chains;
    for (int i = 0; i < 2; ++i) {
      std::vector<TwoTerminal> pieces;
      counts.emplace_back();
      const std::size_t length = rng.between(1, 2);
      for (std::size_t j = 0; j < length; ++j) {
        pieces.push_back(random_piece(rng, 2));
        counts.back().push_back({count_matrix_tree(pieces.back().graph), pair_count(pieces.back())});
      }
      chains.push_back(chain_graph(pieces));
    }
    ctx.report("banana-of-paths", count_gap(union_banana_of_paths(counts), parallel_graph(chains).graph));
  }
  {
    const TwoTerminal h = random_piece(rng, 2);
    const std::size_t k = rng.between(1, 3);
    const std::size_t n = rng.between(1, 2);
    const std::vector<TwoTerminal> chain(n, h);
    const std::vector<TwoTerminal> chains(k, chain_graph(chain));
    const TreeCount formula = union_banana_of_paths_uniform(k, n, count_matrix_tree(h.graph), pair_count(h));
    ctx.report("banana-uniform k=" + std::to_string(k) + " n=" + std::to_string(n),
               count_gap(formula, parallel_graph(chains).graph));
  }
  {
    const TwoTerminal a = random_piece(rng, 3);
    const TwoTerminal b = random_piece(rng, 3);
    auto third = [&rng](const TwoTerminal& piece) {
      std::vector<VertexId> rest;
      for (VertexId v : piece.graph.vertices()) {
        if (v != piece.s && v != piece.t) rest.push_back(v);
      }
      return rng.pick(rest);
    };
    const VertexId as = third(a);
    const VertexId bs = third(b);
    auto side = [](const TwoTerminal& piece, VertexId s) {
      const VertexId p = piece.s;
      const VertexId q = piece.t;
      return TripleSide{count_matrix_tree(piece.graph), count_merged(piece.graph, {p, s}),
                        count_merged(piece.graph, {p, q}), count_merged(piece.graph, {q, s}),
                        count_merged(piece.graph, {p, q, s})};
    };
    const Multigraph joined = glue(a.graph, b.graph, {{a.s, b.s}, {a.t, b.t}, {as, bs}}).graph;
    ctx.report("three-vertex", count_gap(union_three_vertices(side(a, as), side(b, bs)), joined));
  }
}

void eval_quadratic(Context& ctx) {
  for (const auto& v : ctx.vertex_tuples(4)) {
    const Rational residual = magnitude(identification_quadratic_residual(ctx.graph(), v[0], v[1], v[2], v[3])) +
                              magnitude(identification_three_point_residual(ctx.graph(), v[0], v[1], v[2]));
    ctx.report(describe({{"p", name(v[0])}, {"q", name(v[1])}, {"s", name(v[2])}, {"t", name(v[3])}}),
               residual);
  }
}

void eval_contract_id(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(2)) {
    ctx.report(edge_selection(e, v[0], v[1]),
               magnitude(contraction_identity_residual(ctx.graph(), e, v[0], v[1])));
  }
}

void eval_delete_id(Context& ctx) {
  for (const auto& [e, v] : ctx.edge_tuples(2)) {
    ctx.report(edge_selection(e, v[0], v[1]),
               magnitude(deletion_identity_residual(ctx.graph(), e, v[0], v[1])));
  }
}

void eval_span_euler(Context& ctx) {
  for (const auto& v : ctx.vertex_tuples(2)) {
    const Rational residual = magnitude(spanning_tree_euler_residual(ctx.graph(), v[0], v[1])) +
                              magnitude(spanning_tree_euler_residual_bridges(ctx.graph(), v[0], v[1]));
    ctx.report(describe({{"s", name(v[0])}, {"t", name(v[1])}}), residual);
  }
}

void eval_vertex_del(Context& ctx) {
  const Multigraph& g = ctx.graph();
  const TreeCount whole = count_matrix_tree(g);
  std::vector<VertexId> order = g.vertices();
  ctx.rng.shuffle(order);
  if (order.size() > ctx.cap()) order.resize(ctx.cap());
  for (VertexId u : order) {
    if (g.vertex_count() > 1 && !is_connected(delete_vertex(g, u))) {
      ctx.skip();
      continue;
    }
    const VertexDeletionExpansion expansion = vertex_deletion_count(g, u);
    Rational residual = magnitude(Rational(expansion.total - whole));

    std::vector<VertexId> nbrs;
    std::vector<BigInt> a;
    for (const auto& [v, k] : neighbors_with_multiplicity(g, u)) {
      nbrs.push_back(v);
      a.emplace_back(static_cast<unsigned long>(k));
    }
    if (g.vertex_count() > 1 && nbrs.size() >= 2 && nbrs.size() <= 4) {
      const Multigraph h = delete_vertex(g, u);
      const auto c = [&h](std::vector<VertexId> group) { return count_merged(h, group); };
      TreeCount special = 0;
      if (nbrs.size() == 2) {
        special = vertex_deletion_two(a[0], a[1], c({}), c({nbrs[0], nbrs[1]}));
      } else if (nbrs.size() == 3) {
        special = vertex_deletion_three(a[0], a[1], a[2], c({}), c({nbrs[0], nbrs[1]}),
                                        c({nbrs[0], nbrs[2]}), c({nbrs[1], nbrs[2]}),
                                        c({nbrs[0], nbrs[1], nbrs[2]}));
      } else {
        std::vector<TreeCount> counts(16, 0);
        for (std::size_t mask = 1; mask < 16; ++mask) {
          std::vector<VertexId> group;
          for (std::size_t i = 0; i < 4; ++i) {
            if ((mask >> i) & 1U) group.push_back(nbrs[i]);
          }
          counts[mask] = c(group);
        }
        special = vertex_deletion_formula(a, counts);
      }
      residual += magnitude(Rational(special - whole));
    }
    ctx.report(describe({{"u", name(u)}, {"neighbours", std::to_string(nbrs.size())}}), residual);
  }
}

void eval_star_aug(Context& ctx) {
  const Multigraph& g = ctx.graph();
  if (g.vertex_count() < 2) {
    ctx.skip();
    return;
  }
  for (std::size_t c = 0; c < ctx.cap(); ++c) {
    const VertexId anchor = ctx.vertex();
    std::vector<VertexId> others;
    for (VertexId v : g.vertices()) {
      if (v != anchor) others.push_back(v);
    }
    ctx.rng.shuffle(others);
    others.resize(ctx.rng.between(1, std::min<std::size_t>(3, others.size())));
    std::vector<Spoke> spokes;
    std::string selection = "anchor=" + name(anchor) + " spokes=";
    for (VertexId v : others) {
      spokes.push_back({v, ctx.rng.between(1, 2)});
      selection += name(v) + "x" + std::to_string(spokes.back().count) + ",";
    }
    selection.pop_back();
    const TreeCount formula = star_augmentation_count(g, anchor, spokes);
    ctx.report(selection, count_gap(formula, star_augment(g, anchor, spokes)));
  }
}

void eval_tree_count(Context& ctx) {
  const Multigraph& g = ctx.graph();
  const TreeCount matrix = count_matrix_tree(g);
  Rational residual = magnitude(Rational(count_deletion_contraction(g) - matrix));
  std::string selection = "matrix,dc";
  if (g.edge_count() <= 20) {
    residual += magnitude(Rational(count_enumeration(g) - matrix));
    selection += ",enum";
  }
  if (const auto u = find_non_cut_vertex(g)) {
    residual += magnitude(Rational(vertex_deletion_count(g, *u).total - matrix));
    selection += ",vertex-del(u=" + name(*u) + ")";
  }
  ctx.report(selection, residual);
}

void eval_reduction(Context& ctx) {
  const Multigraph& g = ctx.graph();
  for (const auto& v : ctx.vertex_tuples(2)) {
    if (v[0] == v[1]) {
      ctx.skip();
      continue;
    }
    const ReductionResult reduced = reduce_two_terminal(g, v[0], v[1]);
    if (!reduced.resistance) {
      ctx.skip();
      continue;
    }
    ctx.report("reduce " + describe({{"s", name(v[0])}, {"t", name(v[1])}}),
               magnitude(*reduced.resistance - ctx.network().resistance(v[0], v[1])));
  }

  // Delta-Y on the first triangle found, checked on every pair of old vertices.
  for (const auto& a : g.edges()) {
    for (const auto& b : g.edges()) {
      for (const auto& c : g.edges()) {
        if (!(a.id < b.id && b.id < c.id) || a.is_loop() || b.is_loop() || c.is_loop()) continue;
        try {
          const DeltaYResult star = delta_y(g, {a.id, b.id, c.id});
          const Network after(star.graph);
          Rational residual = 0;
          for (VertexId x : g.vertices()) {
            for (VertexId y : g.vertices()) {
              residual += magnitude(after.resistance(x, y) - ctx.network().resistance(x, y));
            }
          }
          ctx.report("delta-y " + describe({{"edges", name(a.id) + "," + name(b.id) + "," + name(c.id)}}),
                     residual);
          return;
        } catch (const PreconditionError&) {
        }
      }
    }
  }
}

const std::vector<std::pair<std::string, Evaluator>>& registry() {
  static const std::vector<std::pair<std::string, Evaluator>> tags{
      {"symmetry", eval_symmetry},
      {"magic", eval_magic},
      {"shorting", eval_shorting},
      {"cutting", eval_cutting},
      {"monotonic1", eval_monotonic1},
      {"monotonic2", eval_monotonic2},
      {"convex", eval_convex},
      {"vol-transfer", eval_vol_transfer},
      {"euler1", eval_euler1},
      {"euler2", eval_euler2},
      {"foster", eval_foster},
      {"derivative", eval_derivative},
      {"tree-resistance", eval_tree_resistance},
      {"tree-voltage", eval_tree_voltage},
      {"averaging", eval_averaging},
      {"unions", eval_unions},
      {"quadratic", eval_quadratic},
      {"contract-id", eval_contract_id},
      {"delete-id", eval_delete_id},
      {"span-euler", eval_span_euler},
      {"vertex-del", eval_vertex_del},
      {"star-aug", eval_star_aug},
      {"tree-count", eval_tree_count},
      {"reduction", eval_reduction},
  };
  return tags;
}

const Evaluator* find_evaluator(const std::string& tag) {
  for (const auto& [name, fn] : registry()) {
    if (name == tag) return fn ? &fn : nullptr;
  }
  return nullptr;
}

}  // namespace

const std::vector<std::string>& registered_tags() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

bool has_evaluator(const std::string& tag) { return find_evaluator(tag) != nullptr; }

SuiteResult run_suite(const GraphGenSpec& spec, const std::vector<std::string>& tags,
                      std::size_t count, const SuiteOptions& options) {
  std::vector<const Evaluator*> evaluators;
  for (const auto& tag : tags) {
    const Evaluator* fn = find_evaluator(tag);
    if (fn == nullptr) throw std::invalid_argument("unknown theorem tag: " + tag);
    evaluators.push_back(fn);
  }
  SuiteResult result;
  if (tags.empty()) return result;
  for (std::size_t i = 0; i < count; ++i) {
    GraphGenSpec instance = spec;
    instance.seed = spec.seed + i;
    const Multigraph g = generate(instance);
    for (std::size_t k = 0; k < tags.size(); ++k) {
      Context ctx(g, tags[k], instance.seed, options, result);
      (*evaluators[k])(ctx);
    }
  }
  return result;
}

}  // namespace kirchhoff
