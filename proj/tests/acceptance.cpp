// Acceptance run: one line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kirchhoff/families.hpp"
#include "kirchhoff/network.hpp"
#include "kirchhoff/polyseq.hpp"
#include "kirchhoff/rayleigh.hpp"
#include "kirchhoff/reduction.hpp"
#include "kirchhoff/spantree.hpp"
#include "kirchhoff/verify.hpp"
#include "oracles.hpp"

using namespace kirchhoff;

namespace {

constexpr double kLimitTables = 1.0;
constexpr double kLimitSequences = 5.0;
constexpr double kLimitAgreement = 60.0;
constexpr double kLimitLaws = 120.0;

constexpr std::size_t kAgreementInstances = 200;
constexpr std::size_t kStandardInstances = 100;
constexpr std::size_t kSmallInstances = 50;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

GraphGenSpec default_spec(std::uint64_t seed, LengthMode lengths = LengthMode::small_rational) {
  GraphGenSpec spec;
  spec.seed = seed;
  spec.lengths = lengths;
  return spec;
}

void require_suite(Outcome& o, const SuiteResult& r, const std::string& label) {
  std::size_t failed = 0;
  for (const auto& report : r.reports) failed += !report.pass;
  o.require(!r.reports.empty(), label + ": no reports");
  o.require(failed == 0, label + ": " + std::to_string(failed) + " failing reports");
  o.detail = o.pass ? std::to_string(r.reports.size()) + " reports" : o.detail;
}

BigInt ipow(long base, long exponent) {
  BigInt out = 1;
  for (long i = 0; i < exponent; ++i) out *= base;
  return out;
}

Outcome closed_form_tables() {
  Outcome o;
  for (std::size_t s = 1; s <= 10; ++s) {
    o.require(count_matrix_tree(path_graph(s)) == 1, "t(P_" + std::to_string(s) + ")");
    o.require(count_matrix_tree(cycle_graph(s)) == s, "t(C_" + std::to_string(s) + ")");
    o.require(count_matrix_tree(banana_graph(s)) == s, "t(B_" + std::to_string(s) + ")");
  }
  for (long n = 1; n <= 7; ++n) {
    const Multigraph k = complete_graph(static_cast<std::size_t>(n));
    o.require(count_matrix_tree(k) == (n <= 2 ? BigInt(1) : ipow(n, n - 2)), "t(K_n)");
    if (n < 2) continue;
    // n^{n-3} is 1/2 at n = 2, so compare as rationals.
    const Rational base = Rational(ipow(n, n)) / (n * n * n);
    for (const auto& e : k.edges()) {
      o.require(Rational(count_matrix_tree(contract_edge(k, e.id).graph)) == 2 * base, "t(K_n / e)");
      o.require(Rational(count_matrix_tree(delete_edge(k, e.id))) == base * (n - 2), "t(K_n - e)");
    }
  }
  o.detail = "paths, cycles, bananas to 10; K_n and its edge minors to 7";
  return o;
}

Outcome fan_wheel_sequences() {
  Outcome o;
  const std::vector<long> fan{1, 3, 8, 21, 55};
  const std::vector<long> wheel{1, 5, 16, 45, 121};
  for (std::size_t n = 1; n <= 5; ++n) {
    o.require(closed_form(Family::fan, n, 1) == fan[n - 1], "fan sequence");
    o.require(closed_form(Family::wheel, n, 1) == wheel[n - 1], "wheel sequence");
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for (unsigned long a = 1; a <= 3; ++a) {
      const Rational x(a);
      o.require(x * eval(morgan_voyce(n - 1), x) == count_matrix_tree(fan_graph(n, a)),
                "a B_{n-1}(a) vs fan n=" + std::to_string(n) + " a=" + std::to_string(a));
      o.require(x * eval(w_poly(n - 1), x) == count_matrix_tree(wheel_graph(n, a)),
                "a W_{n-1}(a) vs wheel n=" + std::to_string(n) + " a=" + std::to_string(a));
    }
  }
  o.detail = "n <= 7, a <= 3";
  return o;
}

Outcome four_way_agreement() {
  Outcome o;
  for (std::size_t i = 0; i < kAgreementInstances; ++i) {
    const Multigraph g = generate(default_spec(1000 + i));
    const TreeCount m = count_matrix_tree(g);
    const auto u = find_non_cut_vertex(g);
    o.require(u.has_value(), "no non-cut vertex");
    const bool agree = count_deletion_contraction(g) == m && count_enumeration(g) == m &&
                       vertex_deletion_count(g, *u).total == m;
    o.require(agree, "disagreement on " + graph_hash(g));
  }
  o.detail = std::to_string(kAgreementInstances) + " instances";
  return o;
}

Outcome explicit_laws() {
  Outcome o;
  const SuiteResult r = run_suite(
      default_spec(2000),
      {"shorting", "cutting", "monotonic1", "monotonic2", "convex", "vol-transfer", "magic"},
      kStandardInstances);
  require_suite(o, r, "law suite");
  return o;
}

Outcome euler_and_foster() {
  Outcome o;
  require_suite(o, run_suite(default_spec(3000), {"euler1", "euler2"}, kStandardInstances), "euler");
  const std::string reports = o.detail;
  for (std::size_t i = 0; i < kStandardInstances; ++i) {
    const Multigraph g = generate(default_spec(3500 + i, LengthMode::unit));
    const Network net(g);
    Rational total = 0;
    for (const auto& e : g.edges()) total += net.resistance(e.u, e.v);
    o.require(total == static_cast<long>(g.vertex_count()) - 1, "Foster sum on " + graph_hash(g));
  }
  if (o.pass) o.detail = reports + ", Foster on " + std::to_string(kStandardInstances) + " unit instances";
  return o;
}

Outcome tree_resistance_bridge() {
  Outcome o;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < kStandardInstances; ++i) {
    const Multigraph g = generate(default_spec(4000 + i, LengthMode::unit));
    const Network net(g);
    for (VertexId p : g.vertices()) {
      for (VertexId q : g.vertices()) {
        o.require(resistance_from_trees(g, p, q) == net.resistance(p, q), "r on " + graph_hash(g));
        for (VertexId s : g.vertices()) {
          o.require(voltage_from_trees(g, p, q, s) == net.voltage(p, q, s), "j on " + graph_hash(g));
          ++checks;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " voltage triples";
  return o;
}

Outcome union_vectors() {
  Outcome o;
  o.require(union_two_vertices(1, 3, 2, 6) == 12, "(1,3,2,6)");
  o.require(union_two_vertices(8, 8, 13, 21) == 272, "(8,8,13,21)");
  o.require(union_three_vertices_identical(27, 45) == 4860, "(27,45)");
  o.require(vertex_deletion_three(2, 3, 1, 4, 3, 4, 3, 2) == 71, "(2,3,1)");
  o.require(union_banana_of_paths({{{8, 8}}, {{2, 1}, {3, 2}}, {{1, 4}, {5, 6}, {3, 1}}}) == 9472,
            "banana of paths");
  if (o.pass) o.detail = "12, 272, 4860, 71, 9472";
  return o;
}

Outcome tree_identities() {
  Outcome o;
  require_suite(o,
                run_suite(default_spec(5000, LengthMode::unit),
                          {"quadratic", "contract-id", "delete-id", "span-euler"}, kStandardInstances),
                "identities");
  return o;
}

Outcome derivative_check() {
  Outcome o;
  require_suite(o, run_suite(default_spec(6000), {"derivative"}, kSmallInstances), "derivative");
  const std::string reports = o.detail;
  std::size_t bridges = 0;
  for (std::size_t i = 0; i < kSmallInstances; ++i) {
    const Multigraph g = generate(default_spec(6000 + i));
    const Network net(g);
    for (const auto& e : g.edges()) {
      if (!is_bridge(g, e.id)) continue;
      for (VertexId s : g.vertices()) {
        for (VertexId t : g.vertices()) {
          const Rational d = resistance_derivative(net, e.id, s, t);
          o.require(d == 0 || d == 1, "bridge derivative " + to_string(d));
          ++bridges;
        }
      }
    }
  }
  if (o.pass) o.detail = reports + ", " + std::to_string(bridges) + " bridge cases in {0, 1}";
  return o;
}

Outcome averaging_identities() {
  Outcome o;
  std::size_t bridgeless = 0;
  for (std::size_t i = 0; i < kStandardInstances; ++i) {
    const Multigraph g = generate(default_spec(7000 + i));
    o.require(averaging_contractions(g).residual == 0, "contractions on " + graph_hash(g));
    bool has_bridge = false;
    for (const auto& e : g.edges()) has_bridge = has_bridge || is_bridge(g, e.id);
    if (has_bridge) continue;
    ++bridgeless;
    o.require(averaging_deletions(g).residual == 0, "deletions on " + graph_hash(g));
  }
  if (o.pass) {
    o.detail = std::to_string(kStandardInstances) + " instances, " + std::to_string(bridgeless) +
               " bridgeless";
  }
  return o;
}

Outcome reduction_oracle() {
  Outcome o;
  for (std::size_t i = 0; i < kSmallInstances; ++i) {
    const auto sp = oracle::random_series_parallel(8000 + i, 2 + static_cast<int>(i % 10));
    const ReductionResult r = reduce_two_terminal(sp.graph, oracle::V(0), oracle::V(1));
    const Rational exact = Network(sp.graph).resistance(oracle::V(0), oracle::V(1));
    o.require(r.resistance.has_value() && *r.resistance == exact, "series-parallel instance " + std::to_string(i));
  }
  std::mt19937_64 rng(8500);
  for (std::size_t i = 0; i < kSmallInstances; ++i) {
    GraphGenSpec spec = default_spec(8500 + i);
    spec.min_vertices = 3;
    Multigraph g = generate(spec);
    std::vector<VertexId> corners = g.vertices();
    std::shuffle(corners.begin(), corners.end(), rng);
    auto length = [&rng] {
      return make_rational(static_cast<long>(rng() % 5 + 1), static_cast<long>(rng() % 3 + 1));
    };
    const EdgeId a = g.add_edge(corners[0], corners[1], length());
    const EdgeId b = g.add_edge(corners[1], corners[2], length());
    const EdgeId c = g.add_edge(corners[0], corners[2], length());
    const Network before(g);
    const Network after(delta_y(g, {a, b, c}).graph);
    for (VertexId x : g.vertices()) {
      for (VertexId y : g.vertices()) {
        o.require(before.resistance(x, y) == after.resistance(x, y), "delta-y instance " + std::to_string(i));
      }
    }
  }
  if (o.pass) o.detail = "50 series-parallel reductions, 50 embedded triangles";
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 means untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form tree-count tables", kLimitTables, closed_form_tables},
      {2, "fan and wheel sequences", kLimitSequences, fan_wheel_sequences},
      {3, "four-way spanning-tree agreement", kLimitAgreement, four_way_agreement},
      {4, "explicit Rayleigh laws", kLimitLaws, explicit_laws},
      {5, "Euler decompositions and Foster sum", 0, euler_and_foster},
      {6, "trees versus pseudo-inverse", 0, tree_resistance_bridge},
      {7, "union formula vectors", 0, union_vectors},
      {8, "tree-count identities", 0, tree_identities},
      {9, "derivative against finite differences", 0, derivative_check},
      {10, "averaging identities", 0, averaging_identities},
      {11, "reduction and Delta-Y oracle", 0, reduction_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += !pass;
    std::string timing = std::to_string(seconds).substr(0, 6) + " s";
    if (c.limit_seconds > 0) timing += " of " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    std::printf("%s criterion %2d  %-40s %s [%s]\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                outcome.detail.c_str(), timing.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
