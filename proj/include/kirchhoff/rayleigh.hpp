#pragma once

// Explicit forms of Rayleigh's shorting, cutting and monotonicity laws, the
// voltage transfer identities that go with them, resistance derivatives and
// the two Euler decompositions of r(s, t) over the edges.
//
// Every quantity on a surgered graph (G_pq, G - e, the contraction of e, or
// G with one length changed) is obtained by building that graph and deriving
// its own pseudo-inverse, never from the identity under test. Residuals are
// therefore genuine two-sided checks and must be exactly zero.

#include <vector>

#include "kirchhoff/network.hpp"

namespace kirchhoff {

/// r(s, t) before and after a surgery together with the explicit correction
/// term predicted by the corresponding law. `residual` is the exact defect of
/// the law's equation; each function documents its sign convention.
struct LawDelta {
  Rational before;
  Rational after;
  Rational correction;
  Rational residual;
};

/// Shorting p to q:
///   r(s,t) = r_{G_pq}(s,t) + [j_p(q,s) - j_p(q,t)]^2 / r(p,q).
/// residual = before - after - correction. Requires p != q.
LawDelta shorting_delta(const Network& net, VertexId p, VertexId q, VertexId s, VertexId t);

/// The three expressions for r_{G_pq}(p, s) in terms of G, summed as
/// absolute deviations from the directly computed value.
Rational shorting_terminal_residual(const Network& net, VertexId p, VertexId q, VertexId s);

/// Cutting a non-bridge edge e = (p, q) of length L, with R = r_{G-e}(p, q):
///   r_{G-e}(s,t) - r(s,t) = [j'_p(q,s) - j'_p(q,t)]^2 / (L + R)
/// where j' is the voltage of G - e. residual = (after - before) - correction.
/// Throws PreconditionError for a bridge.
LawDelta cutting_delta(const Network& net, EdgeId e, VertexId s, VertexId t);

/// Second form of the cutting law, stated with voltages of G itself:
/// r_{G-e}(s,t) - r(s,t) - (L + R)/L^2 [j_p(q,s) - j_p(q,t)]^2.
Rational cutting_second_form_residual(const Network& net, EdgeId e, VertexId s, VertexId t);

/// Contracting e. Non-bridge: correction = (L + R)/(L R) [j_p(q,s) - j_p(q,t)]^2.
/// Bridge: correction = L when e separates s from t, otherwise 0. A self-loop
/// contracts to its deletion and has correction 0.
/// residual = before - after - correction.
LawDelta contraction_delta(const Network& net, EdgeId e, VertexId s, VertexId t);

/// Second form of the non-bridge contraction law using G - e voltages:
/// r(s,t) - r_{contracted}(s,t) - L/(R(L + R)) [j'_p(q,s) - j'_p(q,t)]^2.
Rational contraction_second_form_residual(const Network& net, EdgeId e, VertexId s, VertexId t);

/// Changing the length of e from L to L'. Non-bridge:
///   correction = (L - L') / ((L + R)(L' + R)) [j'_p(q,s) - j'_p(q,t)]^2;
/// bridge: L - L' when e separates s from t, otherwise 0.
/// residual = before - after - correction. Throws PreconditionError if L' <= 0.
LawDelta edge_modification_delta(const Network& net, EdgeId e, const Rational& new_length,
                                 VertexId s, VertexId t);

/// r(s,t) - [L/(L+R) r_{G-e}(s,t) + R/(L+R) r_{contracted}(s,t)] for a
/// non-bridge edge. Throws PreconditionError for a bridge.
Rational convex_combination_check(const Network& net, EdgeId e, VertexId s, VertexId t);

/// Voltage under shorting p to q, both displayed forms:
///   j_u(t,s) = j^{G_pq}_u(t,s) + (j_p(q,u) - j_p(q,t))(j_p(q,u) - j_p(q,s)) / r(p,q).
/// Returns the sum of absolute defects of the two forms. Requires p != q.
Rational voltage_transfer_shorting(const Network& net, VertexId p, VertexId q, VertexId u,
                                   VertexId t, VertexId s);

/// u = p specialisation: j_p(t,s) = j^{G_pq}_p(t,s) + j_p(q,t) j_p(q,s) / r(p,q).
Rational voltage_transfer_shorting_at_p(const Network& net, VertexId p, VertexId q, VertexId t,
                                        VertexId s);

/// t = p specialisation:
/// j_u(p,s) = j^{G_pq}_u(p,s) + (j_p(q,u)^2 - j_p(q,u) j_p(q,s)) / r(p,q).
Rational voltage_transfer_shorting_at_t(const Network& net, VertexId p, VertexId q, VertexId u,
                                        VertexId s);

/// j_u(t,s) = j^{G-e}_u(t,s) - (j'_p(q,u) - j'_p(q,t))(j'_p(q,u) - j'_p(q,s)) / (L + R).
Rational voltage_transfer_cutting(const Network& net, EdgeId e, VertexId u, VertexId t,
                                  VertexId s);

/// j_u(t,s) = j^{contracted}_u(t,s)
///            + L/(R(L + R)) (j'_p(q,u) - j'_p(q,t))(j'_p(q,u) - j'_p(q,s)).
Rational voltage_transfer_contraction(const Network& net, EdgeId e, VertexId u, VertexId t,
                                      VertexId s);

/// Four-way equality
///   j_p(q,s) - j_p(q,t) = j_t(q,s) - j_t(p,s) = j_s(p,t) - j_s(q,t) = j_q(p,t) - j_q(p,s)
/// returned as the sum of absolute differences of consecutive members.
Rational magic_residual(const Network& net, VertexId p, VertexId q, VertexId s, VertexId t);

/// Total violation of the elementary relations between r and j on the
/// triple (x, y, z): symmetry, r(x,x) = 0, j_x(y,x) = 0, j_x(y,y) = r(x,y),
/// splitting r(x,y) = j_x(y,z) + j_y(x,z), 2 j_x(y,z) = r(x,y) + r(x,z) - r(y,z),
/// the bounds 0 <= j_z(x,y) <= min(r(z,x), r(z,y)) and the triangle inequality.
Rational symmetry_residual(const Network& net, VertexId x, VertexId y, VertexId z);

/// dr(s,t)/dL_e. Bridge: 1 if e separates s from t, else 0. Otherwise
/// [j'_p(q,s) - j'_p(q,t)]^2 / (L + R)^2 with j' taken in G - e.
Rational resistance_derivative(const Network& net, EdgeId e, VertexId s, VertexId t);

enum class EulerTermKind { bridge_on_path, bridge_off_path, non_bridge };

struct EulerTerm {
  EdgeId edge;
  EulerTermKind kind;
  Rational contribution;
};

/// r(s,t) = sum over bridges separating s,t of L_i
///        + sum over non-bridges of [j_p(q,s) - j_p(q,t)]^2 / L_i.
std::vector<EulerTerm> euler_decomposition(const Network& net, VertexId s, VertexId t);

/// Same split with non-bridge terms L_i/(L_i + R_i)^2 [j'_p(q,s) - j'_p(q,t)]^2
/// evaluated on G - e_i.
std::vector<EulerTerm> euler_decomposition_deleted_form(const Network& net, VertexId s,
                                                        VertexId t);

/// Uniform over all edges: [r(p,s) - r(q,s) - r(p,t) + r(q,t)]^2 / (4 L_i).
std::vector<EulerTerm> euler_decomposition_resistance_only(const Network& net, VertexId s,
                                                           VertexId t);

Rational sum_contributions(const std::vector<EulerTerm>& terms);

}  // namespace kirchhoff
