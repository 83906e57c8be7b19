#include "kirchhoff/graph_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace kirchhoff {

namespace {

std::string length_text(const Rational& length) {
  return length.get_den() == 1 ? length.get_num().get_str() : to_string(length);
}

}  // namespace

GraphFile GraphFile::parse(std::istream& in) {
  GraphFile file;
  auto declare = [&file](const std::string& name) {
    auto it = file.vertex_ids_.find(name);
    if (it != file.vertex_ids_.end()) return it->second;
    const VertexId id = file.graph_.add_vertex();
    file.vertex_ids_.emplace(name, id);
    file.vertex_names_.emplace(id, name);
    return id;
  };

  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;

    if (words[0] == "vertex") {
      if (words.size() != 2) throw GraphFileError(number, "expected: vertex <id>");
      declare(words[1]);
    } else if (words[0] == "edge") {
      if (words.size() != 4 && words.size() != 5) {
        throw GraphFileError(number, "expected: edge <id> <u> <v> [length]");
      }
      if (file.edge_ids_.contains(words[1])) {
        throw GraphFileError(number, "duplicate edge id '" + words[1] + "'");
      }
      Rational length = 1;
      if (words.size() == 5) {
        try {
          length = parse_rational(words[4]);
        } catch (const std::exception&) {
          throw GraphFileError(number, "malformed length '" + words[4] + "'");
        }
        if (length <= 0) throw GraphFileError(number, "edge length must be positive");
      }
      const VertexId u = declare(words[2]);
      const VertexId v = declare(words[3]);
      const EdgeId id = file.graph_.add_edge(u, v, length);
      file.edge_ids_.emplace(words[1], id);
      file.edge_names_.emplace(id, words[1]);
    } else {
      throw GraphFileError(number, "unknown directive '" + words[0] + "'");
    }
  }
  return file;
}

GraphFile GraphFile::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

GraphFile GraphFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFileError(0, "cannot open '" + path + "'");
  return parse(in);
}

GraphFile GraphFile::from_graph(const Multigraph& g) {
  GraphFile file;
  file.graph_ = g;
  for (VertexId v : g.vertices()) {
    file.vertex_ids_.emplace(std::to_string(v.value), v);
    file.vertex_names_.emplace(v, std::to_string(v.value));
  }
  for (const auto& e : g.edges()) {
    file.edge_ids_.emplace(std::to_string(e.id.value), e.id);
    file.edge_names_.emplace(e.id, std::to_string(e.id.value));
  }
  return file;
}

VertexId GraphFile::vertex(const std::string& name) const {
  const auto it = vertex_ids_.find(name);
  if (it == vertex_ids_.end()) throw UnknownVertexError("unknown vertex '" + name + "'");
  return it->second;
}

EdgeId GraphFile::edge(const std::string& name) const {
  const auto it = edge_ids_.find(name);
  if (it == edge_ids_.end()) throw UnknownEdgeError("unknown edge '" + name + "'");
  return it->second;
}

const std::string& GraphFile::vertex_name(VertexId id) const { return vertex_names_.at(id); }

const std::string& GraphFile::edge_name(EdgeId id) const { return edge_names_.at(id); }

GraphFile GraphFile::derived(const SurgeryResult& surgery) const {
  GraphFile file;
  file.graph_ = surgery.graph;
  std::map<VertexId, std::string> names;
  for (const auto& [from, to] : surgery.rename) {
    std::string& name = names[to];
    name += (name.empty() ? "" : "+") + vertex_name(from);
  }
  for (VertexId v : file.graph_.vertices()) {
    const std::string& name = names.contains(v) ? names[v] : names[v] = std::to_string(v.value);
    file.vertex_ids_.emplace(name, v);
    file.vertex_names_.emplace(v, name);
  }
  for (const auto& e : file.graph_.edges()) {
    const auto it = edge_names_.find(e.id);
    const std::string name = it != edge_names_.end() ? it->second : std::to_string(e.id.value);
    file.edge_ids_.emplace(name, e.id);
    file.edge_names_.emplace(e.id, name);
  }
  return file;
}

std::string GraphFile::to_text() const {
  std::string out;
  for (VertexId v : graph_.vertices()) out += "vertex " + vertex_name(v) + "\n";
  for (const auto& e : graph_.edges()) {
    out += "edge " + edge_name(e.id) + " " + vertex_name(e.u) + " " + vertex_name(e.v) + " " +
           length_text(e.length) + "\n";
  }
  return out;
}

}  // namespace kirchhoff
