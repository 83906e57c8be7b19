#include "kirchhoff/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>

namespace kirchhoff {

namespace {

std::string vertex_name(VertexId v) { return "v" + std::to_string(v.value); }
std::string edge_name(EdgeId e) { return "e" + std::to_string(e.value); }

// Union-find over vertex positions.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

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

DisjointSets components_of(const Multigraph& g, const Edge* skip = nullptr) {
  DisjointSets sets(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (skip != nullptr && e.id == skip->id) continue;
    sets.unite(g.index_of(e.u), g.index_of(e.v));
  }
  return sets;
}

}  // namespace

VertexId Multigraph::add_vertex() {
  const VertexId id = next_vertex_id();
  vertices_.push_back(id);
  return id;
}

void Multigraph::add_vertex(VertexId id) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) {
    vertices_.insert(it, id);
  }
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, const Rational& length) {
  const EdgeId id = next_edge_id();
  add_edge(id, u, v, length);
  return id;
}

void Multigraph::add_edge(EdgeId id, VertexId u, VertexId v, const Rational& length) {
  if (!has_vertex(u)) throw UnknownVertexError("unknown vertex " + vertex_name(u));
  if (!has_vertex(v)) throw UnknownVertexError("unknown vertex " + vertex_name(v));
  if (length <= 0) throw std::invalid_argument("edge length must be positive");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it != edges_.end() && it->id == id) {
    throw std::invalid_argument("duplicate edge id " + edge_name(id));
  }
  edges_.insert(it, Edge{id, u, v, length});
}

bool Multigraph::has_vertex(VertexId id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

bool Multigraph::has_edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId key) { return e.id < key; });
  return it != edges_.end() && it->id == id;
}

const Edge& Multigraph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) {
    throw UnknownEdgeError("unknown edge " + edge_name(id));
  }
  return *it;
}

std::size_t Multigraph::index_of(VertexId id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) {
    throw UnknownVertexError("unknown vertex " + vertex_name(id));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

VertexId Multigraph::next_vertex_id() const {
  return vertices_.empty() ? VertexId{0} : VertexId{vertices_.back().value + 1};
}

EdgeId Multigraph::next_edge_id() const {
  return edges_.empty() ? EdgeId{0} : EdgeId{edges_.back().id.value + 1};
}

Rational Multigraph::total_length() const {
  Rational sum = 0;
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

VertexId SurgeryResult::image(VertexId v) const {
  auto it = rename.find(v);
  if (it == rename.end()) {
    throw UnknownVertexError("unknown vertex " + vertex_name(v));
  }
  return it->second;
}

void VertexPartition::validate(const Multigraph& g) const {
  std::set<VertexId> seen;
  for (const auto& group : groups_) {
    if (group.empty()) {
      throw InvalidPartitionError("empty vertex group");
    }
    for (VertexId v : group) {
      if (!g.has_vertex(v)) {
        throw UnknownVertexError("unknown vertex " + vertex_name(v));
      }
      if (!seen.insert(v).second) {
        throw InvalidPartitionError("vertex " + vertex_name(v) + " appears in two groups");
      }
    }
  }
}

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
  g.edge(e);
  Multigraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const auto& edge : g.edges()) {
    if (edge.id != e) out.add_edge(edge.id, edge.u, edge.v, edge.length);
  }
  return out;
}

SurgeryResult contract_edge(const Multigraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) {
    SurgeryResult result{delete_edge(g, e), {}};
    for (VertexId v : g.vertices()) result.rename.emplace(v, v);
    return result;
  }
  SurgeryResult result = identify(g, VertexPartition({{edge.u, edge.v}}));
  result.graph = delete_edge(result.graph, e);
  return result;
}

SurgeryResult identify(const Multigraph& g, const VertexPartition& partition) {
  partition.validate(g);
  SurgeryResult result;
  for (VertexId v : g.vertices()) result.rename.emplace(v, v);

  VertexId fresh = g.next_vertex_id();
  for (const auto& group : partition.groups()) {
    if (group.size() < 2) continue;
    for (VertexId v : group) result.rename[v] = fresh;
    fresh.value += 1;
  }

  for (const auto& [from, to] : result.rename) result.graph.add_vertex(to);
  for (const auto& edge : g.edges()) {
    result.graph.add_edge(edge.id, result.rename[edge.u], result.rename[edge.v], edge.length);
  }
  return result;
}

Multigraph delete_vertex(const Multigraph& g, VertexId u) {
  g.index_of(u);
  Multigraph out;
  for (VertexId v : g.vertices()) {
    if (v != u) out.add_vertex(v);
  }
  for (const auto& edge : g.edges()) {
    if (edge.u != u && edge.v != u) out.add_edge(edge.id, edge.u, edge.v, edge.length);
  }
  return out;
}

bool is_bridge(const Multigraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) return false;
  DisjointSets sets = components_of(g, &edge);
  return sets.find(g.index_of(edge.u)) != sets.find(g.index_of(edge.v));
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  DisjointSets sets = components_of(g);
  std::map<std::size_t, std::vector<VertexId>> by_root;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    by_root[sets.find(i)].push_back(g.vertices()[i]);
  }
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return false;
  DisjointSets sets = components_of(g);
  const std::size_t root = sets.find(0);
  for (std::size_t i = 1; i < g.vertex_count(); ++i) {
    if (sets.find(i) != root) return false;
  }
  return true;
}

bool connected(const Multigraph& g, VertexId x, VertexId y) {
  DisjointSets sets = components_of(g);
  return sets.find(g.index_of(x)) == sets.find(g.index_of(y));
}

long genus(const Multigraph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + 1;
}

std::vector<std::pair<VertexId, std::size_t>> neighbors_with_multiplicity(const Multigraph& g,
                                                                          VertexId u) {
  g.index_of(u);
  std::map<VertexId, std::size_t> counts;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u == u) ++counts[e.v];
    if (e.v == u) ++counts[e.u];
  }
  return {counts.begin(), counts.end()};
}

Multigraph with_length(const Multigraph& g, EdgeId e, const Rational& length) {
  g.edge(e);
  Multigraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const auto& edge : g.edges()) {
    out.add_edge(edge.id, edge.u, edge.v, edge.id == e ? length : edge.length);
  }
  return out;
}

Multigraph with_unit_lengths(const Multigraph& g) {
  Multigraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const auto& edge : g.edges()) out.add_edge(edge.id, edge.u, edge.v, 1);
  return out;
}

bool has_unit_lengths(const Multigraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.length == 1; });
}

GlueResult glue(const Multigraph& first, const Multigraph& second,
                const std::vector<std::pair<VertexId, VertexId>>& shared) {
  GlueResult result{first, {}};
  for (const auto& [a, b] : shared) {
    first.index_of(a);
    second.index_of(b);
    if (!result.second.emplace(b, a).second) {
      throw InvalidPartitionError("vertex " + vertex_name(b) + " glued twice");
    }
  }
  for (VertexId b : second.vertices()) {
    if (!result.second.contains(b)) {
      result.second.emplace(b, result.graph.add_vertex());
    }
  }
  for (const auto& e : second.edges()) {
    result.graph.add_edge(result.second.at(e.u), result.second.at(e.v), e.length);
  }
  return result;
}

std::string canonical_text(const Multigraph& g) {
  std::string text = "V";
  for (VertexId v : g.vertices()) text += " " + std::to_string(v.value);
  text += " E";
  for (const auto& e : g.edges()) {
    text += " " + std::to_string(e.id.value) + ":" + std::to_string(e.u.value) + "-" +
            std::to_string(e.v.value) + ":" + to_string(e.length);
  }
  return text;
}

std::string graph_hash(const Multigraph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text(g)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace kirchhoff
