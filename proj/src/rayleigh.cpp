#include "kirchhoff/rayleigh.hpp"

#include <optional>

namespace kirchhoff {

namespace {

Rational positive_part(const Rational& x) { return x > 0 ? x : Rational(0); }

// An edge together with G - e (when that graph is connected) and R = r_{G-e}(p, q).
struct EdgeSplit {
  Edge edge;
  bool bridge = false;
  std::optional<Network> deleted;
  Rational detour;

  // j'_p(q, s) - j'_p(q, t) on G - e.
  Rational deleted_gap(VertexId s, VertexId t) const {
    return deleted->voltage(edge.u, edge.v, s) - deleted->voltage(edge.u, edge.v, t);
  }
};

EdgeSplit split_edge(const Network& net, EdgeId e) {
  EdgeSplit split{net.graph().edge(e), is_bridge(net.graph(), e), std::nullopt, 0};
  if (!split.bridge) {
    split.deleted.emplace(delete_edge(net.graph(), e));
    split.detour = split.deleted->resistance(split.edge.u, split.edge.v);
  }
  return split;
}

bool separates(const Network& net, EdgeId e, VertexId s, VertexId t) {
  return !connected(delete_edge(net.graph(), e), s, t);
}

void require_vertices(const Network& net, std::initializer_list<VertexId> vs) {
  for (VertexId v : vs) net.graph().index_of(v);
}

void require_non_bridge(const EdgeSplit& split, const char* law) {
  if (split.bridge) {
    throw PreconditionError(std::string("edge is a bridge; ") + law + " requires a non-bridge edge");
  }
}

// j_p(q, s) - j_p(q, t) on G.
Rational gap(const Network& net, VertexId p, VertexId q, VertexId s, VertexId t) {
  return net.voltage(p, q, s) - net.voltage(p, q, t);
}

struct Shorted {
  Network network;
  RenameMap rename;
};

Shorted short_vertices(const Network& net, VertexId p, VertexId q) {
  if (p == q) {
    throw PreconditionError("p equals q; shorting requires r(p,q) > 0");
  }
  SurgeryResult merged = identify(net.graph(), VertexPartition({{p, q}}));
  return Shorted{Network(std::move(merged.graph)), std::move(merged.rename)};
}

}  // namespace

LawDelta shorting_delta(const Network& net, VertexId p, VertexId q, VertexId s, VertexId t) {
  require_vertices(net, {p, q, s, t});
  const Shorted shorted = short_vertices(net, p, q);
  LawDelta out;
  out.before = net.resistance(s, t);
  out.after = shorted.network.resistance(shorted.rename.at(s), shorted.rename.at(t));
  const Rational g = gap(net, p, q, s, t);
  out.correction = g * g / net.resistance(p, q);
  out.residual = out.before - out.after - out.correction;
  return out;
}

Rational shorting_terminal_residual(const Network& net, VertexId p, VertexId q, VertexId s) {
  require_vertices(net, {p, q, s});
  const Shorted shorted = short_vertices(net, p, q);
  const Rational direct = shorted.network.resistance(shorted.rename.at(p), shorted.rename.at(s));
  const Rational rpq = net.resistance(p, q);
  const Rational jspq = net.voltage(s, p, q);
  const Rational jpqs = net.voltage(p, q, s);
  const Rational first = (net.resistance(p, s) * net.resistance(q, s) - jspq * jspq) / rpq;
  const Rational second = jspq + jpqs * net.voltage(q, p, s) / rpq;
  const Rational third = net.resistance(p, s) - jpqs * jpqs / rpq;
  return abs(first - direct) + abs(second - direct) + abs(third - direct);
}

LawDelta cutting_delta(const Network& net, EdgeId e, VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  const EdgeSplit split = split_edge(net, e);
  require_non_bridge(split, "the cutting law");
  LawDelta out;
  out.before = net.resistance(s, t);
  out.after = split.deleted->resistance(s, t);
  const Rational g = split.deleted_gap(s, t);
  out.correction = g * g / (split.edge.length + split.detour);
  out.residual = out.after - out.before - out.correction;
  return out;
}

Rational cutting_second_form_residual(const Network& net, EdgeId e, VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  const EdgeSplit split = split_edge(net, e);
  require_non_bridge(split, "the cutting law");
  const Rational& length = split.edge.length;
  const Rational g = gap(net, split.edge.u, split.edge.v, s, t);
  const Rational correction = (length + split.detour) / (length * length) * g * g;
  return split.deleted->resistance(s, t) - net.resistance(s, t) - correction;
}

LawDelta contraction_delta(const Network& net, EdgeId e, VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  const EdgeSplit split = split_edge(net, e);
  SurgeryResult contracted = contract_edge(net.graph(), e);
  const Network small(std::move(contracted.graph));

  LawDelta out;
  out.before = net.resistance(s, t);
  out.after = small.resistance(contracted.rename.at(s), contracted.rename.at(t));
  if (split.edge.is_loop()) {
    out.correction = 0;
  } else if (split.bridge) {
    out.correction = separates(net, e, s, t) ? split.edge.length : Rational(0);
  } else {
    const Rational& length = split.edge.length;
    const Rational g = gap(net, split.edge.u, split.edge.v, s, t);
    out.correction = (length + split.detour) / (length * split.detour) * g * g;
  }
  out.residual = out.before - out.after - out.correction;
  return out;
}

Rational contraction_second_form_residual(const Network& net, EdgeId e, VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  const EdgeSplit split = split_edge(net, e);
  require_non_bridge(split, "the contraction law");
  if (split.edge.is_loop()) {
    throw PreconditionError("edge is a self-loop; the contraction law needs R > 0");
  }
  SurgeryResult contracted = contract_edge(net.graph(), e);
  const Network small(std::move(contracted.graph));
  const Rational& length = split.edge.length;
  const Rational g = split.deleted_gap(s, t);
  const Rational correction = length / (split.detour * (length + split.detour)) * g * g;
  return net.resistance(s, t) -
         small.resistance(contracted.rename.at(s), contracted.rename.at(t)) - correction;
}

LawDelta edge_modification_delta(const Network& net, EdgeId e, const Rational& new_length,
                                 VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  if (new_length <= 0) {
    throw PreconditionError("new edge length must be positive");
  }
  const EdgeSplit split = split_edge(net, e);
  const Network modified(with_length(net.graph(), e, new_length));

  LawDelta out;
  out.before = net.resistance(s, t);
  out.after = modified.resistance(s, t);
  const Rational& length = split.edge.length;
  if (split.bridge) {
    out.correction = separates(net, e, s, t) ? Rational(length - new_length) : Rational(0);
  } else {
    const Rational g = split.deleted_gap(s, t);
    out.correction =
        (length - new_length) / ((length + split.detour) * (new_length + split.detour)) * g * g;
  }
  out.residual = out.before - out.after - out.correction;
  return out;
}

Rational convex_combination_check(const Network& net, EdgeId e, VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  const EdgeSplit split = split_edge(net, e);
  require_non_bridge(split, "the convex combination identity");
  SurgeryResult contracted = contract_edge(net.graph(), e);
  const Network small(std::move(contracted.graph));
  const Rational& length = split.edge.length;
  const Rational total = length + split.detour;
  const Rational rhs =
      length / total * split.deleted->resistance(s, t) +
      split.detour / total * small.resistance(contracted.rename.at(s), contracted.rename.at(t));
  return net.resistance(s, t) - rhs;
}

Rational voltage_transfer_shorting(const Network& net, VertexId p, VertexId q, VertexId u,
                                   VertexId t, VertexId s) {
  require_vertices(net, {p, q, u, t, s});
  const Shorted shorted = short_vertices(net, p, q);
  const auto& img = shorted.rename;
  const Rational direct = net.voltage(u, t, s);
  const Rational shorted_value = shorted.network.voltage(img.at(u), img.at(t), img.at(s));
  const Rational rpq = net.resistance(p, q);
  const Rational ju = net.voltage(p, q, u);
  const Rational jt = net.voltage(p, q, t);
  const Rational js = net.voltage(p, q, s);

  const Rational squares =
      ((jt - ju) * (jt - ju) + (js - ju) * (js - ju) - (jt - js) * (jt - js)) / (2 * rpq);
  const Rational product = (ju - jt) * (ju - js) / rpq;
  return abs(direct - shorted_value - squares) + abs(direct - shorted_value - product);
}

Rational voltage_transfer_shorting_at_p(const Network& net, VertexId p, VertexId q, VertexId t,
                                        VertexId s) {
  require_vertices(net, {p, q, t, s});
  const Shorted shorted = short_vertices(net, p, q);
  const auto& img = shorted.rename;
  const Rational rhs = shorted.network.voltage(img.at(p), img.at(t), img.at(s)) +
                       net.voltage(p, q, t) * net.voltage(p, q, s) / net.resistance(p, q);
  return net.voltage(p, t, s) - rhs;
}

Rational voltage_transfer_shorting_at_t(const Network& net, VertexId p, VertexId q, VertexId u,
                                        VertexId s) {
  require_vertices(net, {p, q, u, s});
  const Shorted shorted = short_vertices(net, p, q);
  const auto& img = shorted.rename;
  const Rational ju = net.voltage(p, q, u);
  const Rational rhs = shorted.network.voltage(img.at(u), img.at(p), img.at(s)) +
                       (ju * ju - ju * net.voltage(p, q, s)) / net.resistance(p, q);
  return net.voltage(u, p, s) - rhs;
}

Rational voltage_transfer_cutting(const Network& net, EdgeId e, VertexId u, VertexId t,
                                  VertexId s) {
  require_vertices(net, {u, t, s});
  const EdgeSplit split = split_edge(net, e);
  require_non_bridge(split, "the voltage cutting identity");
  const Network& cut = *split.deleted;
  const VertexId p = split.edge.u;
  const VertexId q = split.edge.v;
  const Rational ju = cut.voltage(p, q, u);
  const Rational product = (ju - cut.voltage(p, q, t)) * (ju - cut.voltage(p, q, s));
  const Rational rhs = cut.voltage(u, t, s) - product / (split.edge.length + split.detour);
  return net.voltage(u, t, s) - rhs;
}

Rational voltage_transfer_contraction(const Network& net, EdgeId e, VertexId u, VertexId t,
                                      VertexId s) {
  require_vertices(net, {u, t, s});
  const EdgeSplit split = split_edge(net, e);
  require_non_bridge(split, "the voltage contraction identity");
  SurgeryResult contracted = contract_edge(net.graph(), e);
  const Network small(std::move(contracted.graph));
  const auto& img = contracted.rename;
  Rational rhs = small.voltage(img.at(u), img.at(t), img.at(s));
  if (!split.edge.is_loop()) {
    const Network& cut = *split.deleted;
    const VertexId p = split.edge.u;
    const VertexId q = split.edge.v;
    const Rational& length = split.edge.length;
    const Rational ju = cut.voltage(p, q, u);
    const Rational product = (ju - cut.voltage(p, q, t)) * (ju - cut.voltage(p, q, s));
    rhs += length / (split.detour * (length + split.detour)) * product;
  }
  return net.voltage(u, t, s) - rhs;
}

Rational magic_residual(const Network& net, VertexId p, VertexId q, VertexId s, VertexId t) {
  require_vertices(net, {p, q, s, t});
  const Rational a = net.voltage(p, q, s) - net.voltage(p, q, t);
  const Rational b = net.voltage(t, q, s) - net.voltage(t, p, s);
  const Rational c = net.voltage(s, p, t) - net.voltage(s, q, t);
  const Rational d = net.voltage(q, p, t) - net.voltage(q, p, s);
  return abs(a - b) + abs(b - c) + abs(c - d);
}

Rational symmetry_residual(const Network& net, VertexId x, VertexId y, VertexId z) {
  require_vertices(net, {x, y, z});
  const Rational rxy = net.resistance(x, y);
  const Rational rxz = net.resistance(x, z);
  const Rational ryz = net.resistance(y, z);
  const Rational jz = net.voltage(z, x, y);
  Rational total = abs(rxy - net.resistance(y, x));
  total += abs(jz - net.voltage(z, y, x));
  total += abs(net.resistance(x, x));
  total += abs(net.voltage(x, y, x));
  total += abs(net.voltage(x, y, y) - rxy);
  total += abs(rxy - net.voltage(x, y, z) - net.voltage(y, x, z));
  total += abs(2 * net.voltage(x, y, z) - rxy - rxz + ryz);
  total += positive_part(-jz);
  total += positive_part(jz - rxz);
  total += positive_part(jz - ryz);
  total += positive_part(rxy - rxz - ryz);
  return total;
}

Rational resistance_derivative(const Network& net, EdgeId e, VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  const EdgeSplit split = split_edge(net, e);
  if (split.bridge) {
    return separates(net, e, s, t) ? Rational(1) : Rational(0);
  }
  const Rational g = split.deleted_gap(s, t);
  const Rational total = split.edge.length + split.detour;
  return g * g / (total * total);
}

std::vector<EulerTerm> euler_decomposition(const Network& net, VertexId s, VertexId t) {
  require_vertices(net, {s, t});
  std::vector<EulerTerm> terms;
  for (const auto& edge : net.graph().edges()) {
    if (is_bridge(net.graph(), edge.id)) {
      const bool on_path = separates(net, edge.id, s, t);
      terms.push_back({edge.id, on_path ? EulerTermKind::bridge_on_path : EulerTermKind::bridge_off_path,
                       on_path ? edge.length : Rational(0)});
    } else {
      const Rational g = gap(net, edge.u, edge.v, s, t);
      terms.push_back({edge.id, EulerTermKind::non_bridge, g * g / edge.length});
    }
  }
  return terms;
}

std::vector<EulerTerm> euler_decomposition_deleted_form(const Network& net, VertexId s,
                                                        VertexId t) {
  require_vertices(net, {s, t});
  std::vector<EulerTerm> terms;
  for (const auto& edge : net.graph().edges()) {
    const EdgeSplit split = split_edge(net, edge.id);
    if (split.bridge) {
      const bool on_path = separates(net, edge.id, s, t);
      terms.push_back({edge.id, on_path ? EulerTermKind::bridge_on_path : EulerTermKind::bridge_off_path,
                       on_path ? edge.length : Rational(0)});
    } else {
      const Rational g = split.deleted_gap(s, t);
      const Rational total = edge.length + split.detour;
      terms.push_back({edge.id, EulerTermKind::non_bridge, edge.length / (total * total) * g * g});
    }
  }
  return terms;
}

std::vector<EulerTerm> euler_decomposition_resistance_only(const Network& net, VertexId s,
                                                           VertexId t) {
  require_vertices(net, {s, t});
  std::vector<EulerTerm> terms;
  for (const auto& edge : net.graph().edges()) {
    const VertexId p = edge.u;
    const VertexId q = edge.v;
    const Rational bracket = net.resistance(p, s) - net.resistance(q, s) - net.resistance(p, t) +
                             net.resistance(q, t);
    EulerTermKind kind = EulerTermKind::non_bridge;
    if (is_bridge(net.graph(), edge.id)) {
      kind = separates(net, edge.id, s, t) ? EulerTermKind::bridge_on_path
                                           : EulerTermKind::bridge_off_path;
    }
    terms.push_back({edge.id, kind, bracket * bracket / (4 * edge.length)});
  }
  return terms;
}

Rational sum_contributions(const std::vector<EulerTerm>& terms) {
  Rational total = 0;
  for (const auto& term : terms) total += term.contribution;
  return total;
}

}  // namespace kirchhoff
