#include <gtest/gtest.h>

#include <cmath>

#include "kirchhoff/families.hpp"
#include "kirchhoff/network.hpp"
#include "kirchhoff/verify.hpp"
#include "oracles.hpp"

using namespace kirchhoff;
using oracle::V;

namespace {

// Four vertices t, s, p, q joined pairwise: a = tp, b = ts, c = sq, d = pq,
// e = sp, f = tq.
struct FourPoint {
  Rational a, b, c, d, e, f;
  Multigraph graph() const {
    return oracle::build(4, {{0, 2, a}, {0, 1, b}, {1, 3, c}, {2, 3, d}, {1, 2, e}, {0, 3, f}});
  }
  Rational k() const {
    return a * b * c + a * b * d + a * c * d + b * c * d + a * b * e + a * c * e + b * d * e +
           c * d * e + a * c * f + b * c * f + a * d * f + b * d * f + a * e * f + b * e * f +
           c * e * f + d * e * f;
  }
};
const VertexId kT = V(0), kS = V(1), kP = V(2), kQ = V(3);

}  // namespace

TEST(Laplacian, SmallGraphs) {
  EXPECT_EQ(laplacian(path_graph(2)), (RationalMatrix{{1, -1}, {-1, 1}}));
  EXPECT_EQ(laplacian(banana_graph(2)), (RationalMatrix{{2, -2}, {-2, 2}}));
  Multigraph looped = path_graph(2);
  looped.add_edge(V(0), V(0), 3);
  EXPECT_EQ(laplacian(looped), laplacian(path_graph(2)));
  Multigraph split = path_graph(2);
  split.add_vertex();
  EXPECT_THROW(laplacian(split), DisconnectedGraphError);
}

TEST(Laplacian, FourPointMatrixHasConductanceRows) {
  const FourPoint fp{1, 2, 3, 5, 7, 11};
  const RationalMatrix l = laplacian(fp.graph());
  // Rows t, s, p, q.
  EXPECT_EQ(l(0, 0), 1 / fp.a + 1 / fp.b + 1 / fp.f);
  EXPECT_EQ(l(1, 1), 1 / fp.b + 1 / fp.e + 1 / fp.c);
  EXPECT_EQ(l(2, 2), 1 / fp.a + 1 / fp.e + 1 / fp.d);
  EXPECT_EQ(l(3, 3), 1 / fp.f + 1 / fp.c + 1 / fp.d);
  EXPECT_EQ(l(0, 1), -1 / fp.b);
  EXPECT_EQ(l(2, 3), -1 / fp.d);
}

TEST(PseudoInverse, PathOfTwo) {
  const RationalMatrix expected{{make_rational(1, 4), make_rational(-1, 4)},
                                {make_rational(-1, 4), make_rational(1, 4)}};
  EXPECT_EQ(pseudo_inverse(laplacian(path_graph(2))), expected);
}

TEST(PseudoInverse, MoorePenroseConditions) {
  GraphGenSpec spec;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    spec.seed = seed;
    const Network net(generate(spec));
    const RationalMatrix& l = net.laplacian();
    const RationalMatrix& lp = net.pseudo_inverse();
    EXPECT_EQ(l * lp * l, l);
    EXPECT_EQ(lp * l * lp, lp);
    EXPECT_EQ(lp.transpose(), lp);
    const std::size_t n = lp.rows();
    for (std::size_t r = 0; r < n; ++r) {
      Rational sum = 0;
      for (std::size_t c = 0; c < n; ++c) sum += lp(r, c);
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(Resistance, ClosedValues) {
  const Network c3(cycle_graph(3));
  EXPECT_EQ(c3.resistance(V(0), V(1)), make_rational(2, 3));
  EXPECT_EQ(c3.resistance(V(2), V(2)), 0);
  const Network k4(complete_graph(4));
  for (std::uint32_t p = 0; p < 4; ++p) {
    for (std::uint32_t q = p + 1; q < 4; ++q) EXPECT_EQ(k4.resistance(V(p), V(q)), make_rational(1, 2));
  }
  EXPECT_THROW(Network(Multigraph{}), DisconnectedGraphError);
  EXPECT_THROW(c3.resistance(V(0), V(7)), UnknownVertexError);
}

TEST(Resistance, FourPointClosedFormsAllOnes) {
  const Network net(FourPoint{1, 1, 1, 1, 1, 1}.graph());
  EXPECT_EQ(net.resistance(kS, kT), make_rational(1, 2));
  EXPECT_EQ(net.resistance(kP, kQ), make_rational(1, 2));
  EXPECT_EQ(net.voltage(kP, kQ, kS), make_rational(1, 4));
  EXPECT_EQ(net.voltage(kP, kQ, kT), make_rational(1, 4));
}

TEST(Resistance, FourPointClosedFormsGeneric) {
  const FourPoint fp{1, 2, 3, 5, 7, 11};
  const auto& [a, b, c, d, e, f] = fp;
  const Rational k = fp.k();
  const Network net(fp.graph());
  EXPECT_EQ(net.resistance(kS, kT),
            b * (a * c * (d + e) + d * e * f + a * (c + d + e) * f + c * e * (d + f)) / k);
  EXPECT_EQ(net.resistance(kP, kQ),
            (a * d * (c * e + b * (c + e)) + d * ((a + b) * c + (a + b + c) * e) * f) / k);
  EXPECT_EQ(net.voltage(kP, kQ, kS), d * e * (b * f + a * (b + c + f)) / k);
  EXPECT_EQ(net.voltage(kP, kQ, kT), a * d * (b * (c + e) + e * (c + f)) / k);

  const SurgeryResult shorted = identify(fp.graph(), VertexPartition({{kP, kQ}}));
  const Rational expected = 1 / (1 / (a * f / (a + f) + c * e / (c + e)) + 1 / b);
  EXPECT_EQ(Network(shorted.graph).resistance(shorted.image(kS), shorted.image(kT)), expected);
}

TEST(Resistance, AgreesWithGroundedSolve) {
  GraphGenSpec spec;
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    spec.seed = seed;
    const Multigraph g = generate(spec);
    const Network net(g);
    for (VertexId p : g.vertices()) {
      for (VertexId q : g.vertices()) {
        EXPECT_EQ(net.resistance(p, q), oracle::resistance(g, p, q));
        for (VertexId z : g.vertices()) EXPECT_EQ(net.voltage(z, p, q), oracle::voltage(g, z, p, q));
      }
    }
  }
}

TEST(Resistance, SeriesParallelOracle) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto sp = oracle::random_series_parallel(seed, 1 + static_cast<int>(seed % 7));
    EXPECT_EQ(Network(sp.graph).resistance(V(0), V(1)), sp.resistance) << "seed " << seed;
  }
}

TEST(Voltage, ElementaryValues) {
  const Network net(complete_graph(4));
  EXPECT_EQ(net.voltage(V(0), V(1), V(0)), 0);
  EXPECT_EQ(net.voltage(V(0), V(1), V(1)), net.resistance(V(0), V(1)));
}

TEST(FloatMirror, TracksExactValues) {
  GraphGenSpec spec;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    spec.seed = seed;
    const Multigraph g = generate(spec);
    const Network net(g);
    const VertexId s = g.vertices().front();
    const VertexId t = g.vertices().back();
    EXPECT_NEAR(resistance_float(g, s, t), to_double(net.resistance(s, t)), 1e-12);
  }
}

TEST(FloatMirror, CentralDifferenceOnTriangle) {
  const Multigraph c3 = cycle_graph(3);
  EXPECT_NEAR(finite_difference_derivative(c3, oracle::E(0), V(0), V(1)), 4.0 / 9.0, 1e-8);
  EXPECT_NEAR(finite_difference_derivative(path_graph(2), oracle::E(0), V(0), V(1)), 1.0, 1e-8);
}
