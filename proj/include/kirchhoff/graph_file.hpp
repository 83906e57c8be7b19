#pragma once

// Line-oriented graph format:
//   # comment
//   vertex <name>
//   edge <name> <u> <v> [length]      length is an integer or a/b, default 1
// Vertices named only by edges are declared implicitly.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

class GraphFileError : public std::runtime_error {
 public:
  GraphFileError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A parsed graph together with the names used in the file. Ids follow the
/// order in which names first appear.
class GraphFile {
 public:
  static GraphFile parse(std::istream& in);
  static GraphFile parse_text(const std::string& text);
  /// Throws GraphFileError (line 0) if the file cannot be opened.
  static GraphFile load(const std::string& path);

  /// Wraps an existing graph; vertices and edges are named by their ids.
  static GraphFile from_graph(const Multigraph& g);

  const Multigraph& graph() const noexcept { return graph_; }

  /// Throws UnknownVertexError / UnknownEdgeError.
  VertexId vertex(const std::string& name) const;
  EdgeId edge(const std::string& name) const;

  const std::string& vertex_name(VertexId id) const;
  const std::string& edge_name(EdgeId id) const;

  /// The graph after a surgery, with merged vertices named "a+b".
  GraphFile derived(const SurgeryResult& surgery) const;

  /// Serialises back to the file format, vertices first, both in id order.
  std::string to_text() const;

 private:
  Multigraph graph_;
  std::map<std::string, VertexId> vertex_ids_;
  std::map<VertexId, std::string> vertex_names_;
  std::map<std::string, EdgeId> edge_ids_;
  std::map<EdgeId, std::string> edge_names_;
};

}  // namespace kirchhoff
