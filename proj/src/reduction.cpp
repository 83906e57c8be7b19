#include "kirchhoff/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kirchhoff {

std::string to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::loop_drop: return "loop-drop";
    case ReductionRule::parallel: return "parallel";
    case ReductionRule::prune: return "prune";
    case ReductionRule::series: return "series";
    case ReductionRule::delta_y: return "delta-y";
  }
  return "unknown";
}

std::string ReductionTrace::to_text() const {
  std::string out;
  for (const auto& step : steps) {
    out += to_string(step.rule);
    if (!step.consumed.empty()) {
      out += " consumed=";
      for (std::size_t i = 0; i < step.consumed.size(); ++i) {
        out += (i ? ",e" : "e") + std::to_string(step.consumed[i].value);
      }
    }
    if (!step.produced.empty()) {
      out += " produced=";
      for (std::size_t i = 0; i < step.produced.size(); ++i) {
        const auto& p = step.produced[i];
        out += (i ? ",e" : "e") + std::to_string(p.id.value) + "(v" + std::to_string(p.u.value) +
               ",v" + std::to_string(p.v.value) + "," + to_string(p.length) + ")";
      }
    }
    if (!step.removed.empty()) {
      out += " removed=";
      for (std::size_t i = 0; i < step.removed.size(); ++i) {
        out += (i ? ",v" : "v") + std::to_string(step.removed[i].value);
      }
    }
    if (step.added) out += " added=v" + std::to_string(step.added->value);
    out += "\n";
  }
  return out;
}

namespace {

Multigraph apply_step(const Multigraph& g, const ReductionStep& step) {
  const std::set<EdgeId> consumed(step.consumed.begin(), step.consumed.end());
  const std::set<VertexId> removed(step.removed.begin(), step.removed.end());
  for (EdgeId e : consumed) g.edge(e);
  for (VertexId v : removed) g.index_of(v);

  Multigraph out;
  for (VertexId v : g.vertices()) {
    if (!removed.contains(v)) out.add_vertex(v);
  }
  if (step.added) out.add_vertex(*step.added);
  for (const auto& e : g.edges()) {
    if (!consumed.contains(e.id)) out.add_edge(e.id, e.u, e.v, e.length);
  }
  for (const auto& p : step.produced) out.add_edge(p.id, p.u, p.v, p.length);
  return out;
}

using Endpoints = std::pair<VertexId, VertexId>;

Endpoints key_of(const Edge& e) { return std::minmax(e.u, e.v); }

// Corners x < y < z and the edges xy, xz, yz.
struct Triangle {
  std::array<VertexId, 3> vertices;
  std::array<EdgeId, 3> edges;
};

Triangle validate_triangle(const Multigraph& g, const std::array<EdgeId, 3>& triangle) {
  std::map<Endpoints, EdgeId> by_ends;
  std::set<VertexId> corners;
  for (EdgeId id : triangle) {
    const Edge& e = g.edge(id);
    if (e.is_loop() || !by_ends.emplace(key_of(e), id).second) {
      throw PreconditionError("edges do not form a triangle");
    }
    corners.insert(e.u);
    corners.insert(e.v);
  }
  if (corners.size() != 3) throw PreconditionError("edges do not form a triangle");
  const std::vector<VertexId> v(corners.begin(), corners.end());
  return Triangle{{v[0], v[1], v[2]},
                  {by_ends.at({v[0], v[1]}), by_ends.at({v[0], v[2]}), by_ends.at({v[1], v[2]})}};
}

ReductionStep delta_y_step(const Multigraph& g, const Triangle& tri, VertexId center,
                           EdgeId first_edge) {
  const Rational& xy = g.edge(tri.edges[0]).length;
  const Rational& xz = g.edge(tri.edges[1]).length;
  const Rational& yz = g.edge(tri.edges[2]).length;
  const Rational total = xy + xz + yz;
  const std::array<Rational, 3> arms{xy * xz / total, xy * yz / total, xz * yz / total};

  ReductionStep step{ReductionRule::delta_y, {tri.edges.begin(), tri.edges.end()}, {}, {}, center};
  for (std::size_t i = 0; i < 3; ++i) {
    step.produced.push_back(
        {EdgeId{first_edge.value + static_cast<std::uint32_t>(i)}, center, tri.vertices[i], arms[i]});
  }
  return step;
}

class Reducer {
 public:
  Reducer(const Multigraph& g, VertexId s, VertexId t)
      : graph_(g), s_(s), t_(t), next_edge_(g.next_edge_id()), next_vertex_(g.next_vertex_id()) {}

  ReductionResult run() {
    ReductionResult result;
    const std::size_t budget = 10 * graph_.edge_count();
    while (!finished()) {
      if (result.trace.steps.size() >= budget) return result;
      std::optional<ReductionStep> step = next_step();
      if (!step) return result;
      graph_ = apply_step(graph_, *step);
      result.trace.steps.push_back(std::move(*step));
    }
    result.resistance = graph_.edges().front().length;
    return result;
  }

 private:
  bool finished() const {
    return graph_.vertex_count() == 2 && graph_.edge_count() == 1 &&
           !graph_.edges().front().is_loop();
  }

  bool terminal(VertexId v) const { return v == s_ || v == t_; }

  EdgeId fresh_edge() {
    const EdgeId id = next_edge_;
    next_edge_.value += 1;
    return id;
  }

  std::optional<ReductionStep> next_step() {
    for (const auto& e : graph_.edges()) {
      if (e.is_loop()) return ReductionStep{ReductionRule::loop_drop, {e.id}, {}, {}, {}};
    }
    if (auto step = parallel_step()) return step;

    std::map<VertexId, std::vector<const Edge*>> incident;
    for (VertexId v : graph_.vertices()) incident[v];
    for (const auto& e : graph_.edges()) {
      incident[e.u].push_back(&e);
      incident[e.v].push_back(&e);
    }
    for (const auto& [v, edges] : incident) {
      if (terminal(v) || edges.size() > 1) continue;
      ReductionStep step{ReductionRule::prune, {}, {}, {v}, {}};
      if (!edges.empty()) step.consumed.push_back(edges.front()->id);
      return step;
    }
    for (const auto& [v, edges] : incident) {
      if (terminal(v) || edges.size() != 2) continue;
      const Edge& a = *edges[0];
      const Edge& b = *edges[1];
      const ProducedEdge merged{fresh_edge(), a.other(v), b.other(v), a.length + b.length};
      return ReductionStep{ReductionRule::series, {a.id, b.id}, {merged}, {v}, {}};
    }
    return delta_y_search();
  }

  std::optional<ReductionStep> parallel_step() {
    std::map<Endpoints, std::vector<const Edge*>> classes;
    for (const auto& e : graph_.edges()) classes[key_of(e)].push_back(&e);
    const std::vector<const Edge*>* best = nullptr;
    for (const auto& [ends, members] : classes) {
      if (members.size() < 2) continue;
      if (best == nullptr || members.front()->id < best->front()->id) best = &members;
    }
    if (best == nullptr) return std::nullopt;
    const Edge& a = *(*best)[0];
    const Edge& b = *(*best)[1];
    const ProducedEdge merged{fresh_edge(), a.u, a.v, a.length * b.length / (a.length + b.length)};
    return ReductionStep{ReductionRule::parallel, {a.id, b.id}, {merged}, {}, {}};
  }

  std::optional<ReductionStep> delta_y_search() {
    std::map<Endpoints, EdgeId> by_ends;
    std::map<VertexId, std::set<VertexId>> adjacent;
    for (const auto& e : graph_.edges()) {
      by_ends.emplace(key_of(e), e.id);
      adjacent[e.u].insert(e.v);
      adjacent[e.v].insert(e.u);
    }
    for (const auto& [x, around] : adjacent) {
      for (auto y = around.upper_bound(x); y != around.end(); ++y) {
        for (auto z = std::next(y); z != around.end(); ++z) {
          if (!adjacent[*y].contains(*z)) continue;
          const Triangle tri{{x, *y, *z}, {by_ends.at({x, *y}), by_ends.at({x, *z}), by_ends.at({*y, *z})}};
          const VertexId center = next_vertex_;
          next_vertex_.value += 1;
          const EdgeId first = next_edge_;
          next_edge_.value += 3;
          return delta_y_step(graph_, tri, center, first);
        }
      }
    }
    return std::nullopt;
  }

  Multigraph graph_;
  VertexId s_;
  VertexId t_;
  EdgeId next_edge_;
  VertexId next_vertex_;
};

}  // namespace

ReductionResult reduce_two_terminal(const Multigraph& g, VertexId s, VertexId t) {
  g.index_of(s);
  g.index_of(t);
  if (s == t) throw PreconditionError("reduction needs distinct terminals");
  if (!is_connected(g)) throw DisconnectedGraphError("graph is disconnected");
  return Reducer(g, s, t).run();
}

DeltaYResult delta_y(const Multigraph& g, const std::array<EdgeId, 3>& triangle) {
  const Triangle tri = validate_triangle(g, triangle);
  const VertexId center = g.next_vertex_id();
  const ReductionStep step = delta_y_step(g, tri, center, g.next_edge_id());
  return DeltaYResult{apply_step(g, step), center,
                      {step.produced[0].id, step.produced[1].id, step.produced[2].id}};
}

Multigraph replay(const Multigraph& g, const ReductionTrace& trace) {
  Multigraph current = g;
  for (const auto& step : trace.steps) current = apply_step(current, step);
  return current;
}

}  // namespace kirchhoff
