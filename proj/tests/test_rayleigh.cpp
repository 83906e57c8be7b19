#include <gtest/gtest.h>

#include "kirchhoff/families.hpp"
#include "kirchhoff/rayleigh.hpp"
#include "kirchhoff/verify.hpp"
#include "oracles.hpp"

using namespace kirchhoff;
using oracle::E;
using oracle::V;

namespace {

Rational half() { return make_rational(1, 2); }

std::vector<Multigraph> random_graphs(std::uint64_t first, std::size_t count) {
  std::vector<Multigraph> out;
  GraphGenSpec spec;
  for (std::size_t i = 0; i < count; ++i) {
    spec.seed = first + i;
    out.push_back(generate(spec));
  }
  return out;
}

}  // namespace

TEST(Shorting, FourPointSymmetricCaseHasNoCorrection) {
  const Multigraph k4 = complete_graph(4);
  const Network net(k4);
  const LawDelta d = shorting_delta(net, V(2), V(3), V(1), V(0));
  EXPECT_EQ(d.before, half());
  EXPECT_EQ(d.correction, 0);
  EXPECT_EQ(d.after, half());
  EXPECT_EQ(d.residual, 0);
}

TEST(Shorting, SquareWithOppositeCornersShorted) {
  // Cyclic order p, s, q, t.
  const Multigraph c4 = cycle_graph(4);
  const VertexId p = V(0), s = V(1), q = V(2), t = V(3);
  const LawDelta d = shorting_delta(Network(c4), p, q, s, t);
  EXPECT_EQ(d.before, 1);
  const SurgeryResult pq = identify(c4, VertexPartition({{p, q}}));
  EXPECT_EQ(d.after, oracle::resistance(pq.graph, pq.image(s), pq.image(t)));
  EXPECT_EQ(d.after, 1);
  EXPECT_EQ(d.correction, 0);
  EXPECT_EQ(d.residual, 0);
  EXPECT_THROW(shorting_delta(Network(c4), p, p, s, t), PreconditionError);
}

TEST(Shorting, RandomGraphsAgreeWithDirectSolve) {
  for (const Multigraph& g : random_graphs(1, 25)) {
    const Network net(g);
    const auto& vs = g.vertices();
    if (vs.size() < 2) continue;
    const VertexId p = vs[0], q = vs[1], s = vs.back(), t = vs[vs.size() / 2];
    const LawDelta d = shorting_delta(net, p, q, s, t);
    const SurgeryResult pq = identify(g, VertexPartition({{p, q}}));
    EXPECT_EQ(d.after, oracle::resistance(pq.graph, pq.image(s), pq.image(t)));
    EXPECT_EQ(d.residual, 0);
    EXPECT_GE(d.before, d.after);
    EXPECT_EQ(shorting_terminal_residual(net, p, q, s), 0);
  }
}

TEST(Cutting, TriangleEdgeBetweenTerminals) {
  const LawDelta d = cutting_delta(Network(cycle_graph(3)), E(0), V(0), V(1));
  EXPECT_EQ(d.before, make_rational(2, 3));
  EXPECT_EQ(d.after, 2);
  EXPECT_EQ(d.correction, make_rational(4, 3));
  EXPECT_EQ(d.residual, 0);
  EXPECT_EQ(cutting_second_form_residual(Network(cycle_graph(3)), E(0), V(0), V(1)), 0);
}

TEST(Cutting, SelfLoopAndBridge) {
  Multigraph g = cycle_graph(3);
  const EdgeId loop = g.add_edge(V(1), V(1), 2);
  const LawDelta d = cutting_delta(Network(g), loop, V(0), V(2));
  EXPECT_EQ(d.correction, 0);
  EXPECT_EQ(d.residual, 0);
  EXPECT_THROW(cutting_delta(Network(path_graph(3)), E(0), V(0), V(2)), PreconditionError);
}

TEST(Cutting, RandomGraphsAgreeWithDirectSolve) {
  for (const Multigraph& g : random_graphs(40, 25)) {
    const Network net(g);
    const VertexId s = g.vertices().front(), t = g.vertices().back();
    for (const auto& e : g.edges()) {
      if (is_bridge(g, e.id)) continue;
      const LawDelta d = cutting_delta(net, e.id, s, t);
      EXPECT_EQ(d.after, oracle::resistance(delete_edge(g, e.id), s, t));
      EXPECT_EQ(d.residual, 0);
      EXPECT_LE(d.before, d.after);
      EXPECT_EQ(cutting_second_form_residual(net, e.id, s, t), 0);
    }
  }
}

TEST(Contraction, BridgesAndTriangle) {
  const Network p3(path_graph(3));
  const LawDelta on_path = contraction_delta(p3, E(0), V(0), V(2));
  EXPECT_EQ(on_path.correction, 1);
  EXPECT_EQ(on_path.residual, 0);
  const LawDelta off_path = contraction_delta(p3, E(0), V(1), V(2));
  EXPECT_EQ(off_path.correction, 0);
  EXPECT_EQ(off_path.residual, 0);

  const LawDelta tri = contraction_delta(Network(cycle_graph(3)), E(0), V(0), V(1));
  EXPECT_EQ(tri.before, make_rational(2, 3));
  EXPECT_EQ(tri.after, 0);
  EXPECT_EQ(tri.correction, make_rational(2, 3));
  EXPECT_EQ(tri.residual, 0);
}

TEST(Contraction, RandomGraphsAgreeWithDirectSolve) {
  for (const Multigraph& g : random_graphs(80, 25)) {
    const Network net(g);
    const VertexId s = g.vertices().front(), t = g.vertices().back();
    for (const auto& e : g.edges()) {
      const LawDelta d = contraction_delta(net, e.id, s, t);
      const SurgeryResult c = contract_edge(g, e.id);
      EXPECT_EQ(d.after, oracle::resistance(c.graph, c.image(s), c.image(t)));
      EXPECT_EQ(d.residual, 0);
      if (!e.is_loop() && !is_bridge(g, e.id)) {
        EXPECT_EQ(contraction_second_form_residual(net, e.id, s, t), 0);
      }
    }
  }
}

TEST(EdgeModification, FixedCases) {
  const Network c3(cycle_graph(3));
  EXPECT_EQ(edge_modification_delta(c3, E(0), 1, V(0), V(1)).correction, 0);
  const LawDelta longer = edge_modification_delta(c3, E(0), 2, V(0), V(1));
  EXPECT_EQ(longer.after, oracle::resistance(with_length(cycle_graph(3), E(0), 2), V(0), V(1)));
  EXPECT_EQ(longer.residual, 0);

  const LawDelta bridge = edge_modification_delta(Network(path_graph(3)), E(1), 5, V(0), V(2));
  EXPECT_EQ(bridge.correction, -4);
  EXPECT_EQ(bridge.residual, 0);
  EXPECT_THROW(edge_modification_delta(c3, E(0), 0, V(0), V(1)), PreconditionError);
}

TEST(EdgeModification, MonotoneInLength) {
  for (const Multigraph& g : random_graphs(120, 20)) {
    const Network net(g);
    const VertexId s = g.vertices().front(), t = g.vertices().back();
    for (const auto& e : g.edges()) {
      const Rational shorter = e.length / 2;
      const LawDelta d = edge_modification_delta(net, e.id, shorter, s, t);
      EXPECT_EQ(d.residual, 0);
      EXPECT_GE(d.before, d.after);
    }
  }
}

TEST(ConvexCombination, ZeroOnSmallFamilies) {
  const Network c3(cycle_graph(3));
  const Network k4(complete_graph(4));
  for (std::uint32_t e = 0; e < 3; ++e) {
    for (std::uint32_t s = 0; s < 3; ++s) {
      for (std::uint32_t t = 0; t < 3; ++t) EXPECT_EQ(convex_combination_check(c3, E(e), V(s), V(t)), 0);
    }
  }
  for (std::uint32_t e = 0; e < 6; ++e) {
    for (std::uint32_t s = 0; s < 4; ++s) {
      for (std::uint32_t t = 0; t < 4; ++t) EXPECT_EQ(convex_combination_check(k4, E(e), V(s), V(t)), 0);
    }
  }
}

TEST(VoltageTransfer, AllFormsVanish) {
  const Multigraph k4 = oracle::build(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 5}, {1, 3, make_rational(1, 2)}, {2, 3, 7}});
  const Network net(k4);
  for (std::uint32_t u = 0; u < 4; ++u) {
    for (std::uint32_t t = 0; t < 4; ++t) {
      for (std::uint32_t s = 0; s < 4; ++s) {
        EXPECT_EQ(voltage_transfer_shorting(net, V(0), V(1), V(u), V(t), V(s)), 0);
        EXPECT_EQ(voltage_transfer_shorting_at_p(net, V(2), V(3), V(t), V(s)), 0);
        EXPECT_EQ(voltage_transfer_shorting_at_t(net, V(2), V(3), V(u), V(s)), 0);
        for (std::uint32_t e = 0; e < 6; ++e) {
          EXPECT_EQ(voltage_transfer_cutting(net, E(e), V(u), V(t), V(s)), 0);
          EXPECT_EQ(voltage_transfer_contraction(net, E(e), V(u), V(t), V(s)), 0);
        }
      }
    }
  }
}

TEST(Magic, RandomGraphs) {
  for (const Multigraph& g : random_graphs(200, 15)) {
    const Network net(g);
    for (VertexId p : g.vertices()) {
      for (VertexId q : g.vertices()) {
        EXPECT_EQ(magic_residual(net, p, q, g.vertices().front(), g.vertices().back()), 0);
        EXPECT_EQ(symmetry_residual(net, p, q, g.vertices().back()), 0);
      }
    }
  }
}

TEST(Derivative, FixedCases) {
  EXPECT_EQ(resistance_derivative(Network(path_graph(2)), E(0), V(0), V(1)), 1);
  EXPECT_EQ(resistance_derivative(Network(cycle_graph(3)), E(1), V(0), V(0)), 0);
  EXPECT_EQ(resistance_derivative(Network(cycle_graph(3)), E(0), V(0), V(1)), make_rational(4, 9));
  EXPECT_EQ(resistance_derivative(Network(path_graph(3)), E(0), V(1), V(2)), 0);
}

TEST(Derivative, MatchesCentralDifference) {
  for (const Multigraph& g : random_graphs(300, 20)) {
    const Network net(g);
    const VertexId s = g.vertices().front(), t = g.vertices().back();
    for (const auto& e : g.edges()) {
      const double exact = to_double(resistance_derivative(net, e.id, s, t));
      const double numeric = finite_difference_derivative(g, e.id, s, t);
      const double scale = exact == 0 ? 1.0 : std::abs(exact);
      EXPECT_LE(std::abs(exact - numeric) / scale, kDerivativeTolerance);
    }
  }
}

TEST(Euler, PathOfTwo) {
  const Multigraph p2 = oracle::build(2, {{0, 1, 3}});
  const auto first = euler_decomposition(Network(p2), V(0), V(1));
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].contribution, 3);
  EXPECT_EQ(first[0].kind, EulerTermKind::bridge_on_path);
  const auto second = euler_decomposition_resistance_only(Network(p2), V(0), V(1));
  EXPECT_EQ(second[0].contribution, 3);
}

TEST(Euler, TriangleTerms) {
  const Network c3(cycle_graph(3));
  const auto terms = euler_decomposition(c3, V(0), V(1));
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].contribution, make_rational(4, 9));
  EXPECT_EQ(terms[1].contribution, make_rational(1, 9));
  EXPECT_EQ(terms[2].contribution, make_rational(1, 9));
  EXPECT_EQ(sum_contributions(terms), make_rational(2, 3));
  const auto second = euler_decomposition_resistance_only(c3, V(0), V(1));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(second[i].contribution, terms[i].contribution);
  for (const auto& term : euler_decomposition(c3, V(2), V(2))) EXPECT_EQ(term.contribution, 0);
  EXPECT_EQ(sum_contributions(euler_decomposition_resistance_only(c3, V(2), V(2))), 0);
}

TEST(Euler, AllFormsSumToResistance) {
  for (const Multigraph& g : random_graphs(400, 30)) {
    const Network net(g);
    for (VertexId s : g.vertices()) {
      const VertexId t = g.vertices().back();
      const Rational r = oracle::resistance(g, s, t);
      EXPECT_EQ(sum_contributions(euler_decomposition(net, s, t)), r);
      EXPECT_EQ(sum_contributions(euler_decomposition_deleted_form(net, s, t)), r);
      EXPECT_EQ(sum_contributions(euler_decomposition_resistance_only(net, s, t)), r);
    }
  }
}
