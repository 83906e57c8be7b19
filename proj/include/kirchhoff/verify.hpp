#pragma once

// Seeded random multigraphs and the identity suite that evaluates every
// resistance and spanning-tree identity on them as an exact residual.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

enum class LengthMode { unit, small_rational };

struct GraphGenSpec {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 6;
  std::size_t min_edges = 1;
  std::size_t max_edges = 10;
  double parallel_probability = 0.15;
  double loop_probability = 0.05;
  LengthMode lengths = LengthMode::small_rational;
  std::uint64_t seed = 1;
};

/// Connected multigraph drawn from the spec: a random spanning tree, then
/// extra edges (self-loops, copies of existing edges or fresh pairs), then a
/// random relabelling of vertex and edge ids. Identical for identical specs.
/// Throws PreconditionError when no vertex and edge count in range admit a
/// connected graph within a bounded number of draws.
Multigraph generate(const GraphGenSpec& spec);

struct IdentityReport {
  std::string tag;
  std::string graph_hash;
  std::string selection;
  Rational residual;
  bool pass = false;
};

struct SuiteOptions {
  /// Selections sampled per instance and tag.
  std::size_t cap = 20;
  /// Every vertex tuple instead of a sample when the graph has at most five
  /// vertices.
  bool exhaustive = false;
};

struct SuiteResult {
  std::vector<IdentityReport> reports;
  /// Selections dropped per tag because a hypothesis failed (for example a
  /// bridge where a non-bridge is required).
  std::map<std::string, std::size_t> skipped;

  bool all_passed() const;
};

/// Every tag the suite knows, in evaluation order.
const std::vector<std::string>& registered_tags();

/// True iff `tag` is registered and has an evaluator.
bool has_evaluator(const std::string& tag);

/// Instance i uses the graph generated with seed spec.seed + i. Reports are
/// ordered by instance, then by tag in the order given. Throws
/// std::invalid_argument for an unknown tag.
SuiteResult run_suite(const GraphGenSpec& spec, const std::vector<std::string>& tags,
                      std::size_t count, const SuiteOptions& options = {});

/// "tag<TAB>hash<TAB>selection<TAB>residual<TAB>pass|fail".
std::string to_line(const IdentityReport& report);

/// Tolerance of the finite-difference derivative check: relative when the
/// exact derivative is nonzero, absolute otherwise.
inline constexpr double kDerivativeTolerance = 1e-6;

}  // namespace kirchhoff
