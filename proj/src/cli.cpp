#include "kirchhoff/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "kirchhoff/graph_file.hpp"
#include "kirchhoff/network.hpp"
#include "kirchhoff/rayleigh.hpp"
#include "kirchhoff/reduction.hpp"
#include "kirchhoff/spantree.hpp"
#include "kirchhoff/verify.hpp"

namespace kirchhoff {

namespace {

constexpr int kExitFailedReport = 1;
constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitUnknownId = 4;
constexpr int kExitOther = 5;

void print_value(std::ostream& out, const Rational& value) {
  out << to_string(value) << "\n" << to_decimal(value, 12) << "\n";
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, separator)) {
    if (!current.empty()) parts.push_back(current);
  }
  return parts;
}

std::string kind_name(EulerTermKind kind) {
  switch (kind) {
    case EulerTermKind::bridge_on_path: return "bridge-on-path";
    case EulerTermKind::bridge_off_path: return "bridge-off-path";
    case EulerTermKind::non_bridge: return "non-bridge";
  }
  return "unknown";
}

struct Options {
  std::string file;
  std::vector<std::string> vertices;
  std::string edge;
  std::string method = "matrix";
  std::string form = "I";
  std::vector<std::string> groups;
  std::string family;
  std::size_t n = 0;
  std::size_t a = 1;
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::size_t cap = 20;
  std::string tags;
  bool exhaustive = false;
  bool unit = false;
};

int cmd_resistance(const Options& o, std::ostream& out) {
  const GraphFile file = GraphFile::load(o.file);
  const Network net(file.graph());
  print_value(out, net.resistance(file.vertex(o.vertices[0]), file.vertex(o.vertices[1])));
  return 0;
}

int cmd_voltage(const Options& o, std::ostream& out) {
  const GraphFile file = GraphFile::load(o.file);
  const Network net(file.graph());
  print_value(out, net.voltage(file.vertex(o.vertices[0]), file.vertex(o.vertices[1]),
                               file.vertex(o.vertices[2])));
  return 0;
}

int cmd_spantree(const Options& o, std::ostream& out) {
  const GraphFile file = GraphFile::load(o.file);
  const Multigraph& g = file.graph();
  if (o.method == "matrix") {
    out << count_matrix_tree(g) << "\n";
  } else if (o.method == "dc") {
    out << count_deletion_contraction(g) << "\n";
  } else if (o.method == "enum") {
    out << count_enumeration(g) << "\n";
  } else {
    if (!is_connected(g)) {
      out << 0 << "\n";
      return 0;
    }
    const auto u = find_non_cut_vertex(g);
    out << vertex_deletion_count(g, *u).total << "\n";
  }
  return 0;
}

int cmd_identify(const Options& o, std::ostream& out) {
  const GraphFile file = GraphFile::load(o.file);
  VertexPartition partition;
  for (const auto& group : o.groups) {
    std::vector<VertexId> members;
    for (const auto& name : split(group, ',')) members.push_back(file.vertex(name));
    partition.add_group(std::move(members));
  }
  const SurgeryResult merged = identify(file.graph(), partition);
  const GraphFile result = file.derived(merged);
  out << "# spanning trees: " << count_matrix_tree(merged.graph) << "\n" << result.to_text();
  return 0;
}

int cmd_euler(const Options& o, std::ostream& out) {
  const GraphFile file = GraphFile::load(o.file);
  const Network net(file.graph());
  const VertexId s = file.vertex(o.vertices[0]);
  const VertexId t = file.vertex(o.vertices[1]);
  const auto terms = o.form == "I" ? euler_decomposition(net, s, t)
                                   : euler_decomposition_resistance_only(net, s, t);
  for (const auto& term : terms) {
    out << file.edge_name(term.edge) << " " << kind_name(term.kind) << " "
        << to_string(term.contribution) << "\n";
  }
  out << "total " << to_string(sum_contributions(terms)) << "\n";
  return 0;
}

int cmd_derivative(const Options& o, std::ostream& out) {
  const GraphFile file = GraphFile::load(o.file);
  const Network net(file.graph());
  const EdgeId e = file.edge(o.edge);
  const VertexId s = file.vertex(o.vertices[0]);
  const VertexId t = file.vertex(o.vertices[1]);
  print_value(out, resistance_derivative(net, e, s, t));
  std::ostringstream numeric;
  numeric.precision(12);
  numeric << finite_difference_derivative(file.graph(), e, s, t);
  out << "finite-difference " << numeric.str() << "\n";
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const GraphFile file = GraphFile::load(o.file);
  const ReductionResult result =
      reduce_two_terminal(file.graph(), file.vertex(o.vertices[0]), file.vertex(o.vertices[1]));
  out << (result.resistance ? to_string(*result.resistance) : std::string("not-reducible")) << "\n";
  auto vname = [&](VertexId v) {
    return file.graph().has_vertex(v) ? file.vertex_name(v) : "v" + std::to_string(v.value);
  };
  auto ename = [&](EdgeId e) {
    return file.graph().has_edge(e) ? file.edge_name(e) : "e" + std::to_string(e.value);
  };
  for (const auto& step : result.trace.steps) {
    out << to_string(step.rule);
    for (std::size_t i = 0; i < step.consumed.size(); ++i) {
      out << (i ? "," : " consumed=") << ename(step.consumed[i]);
    }
    for (std::size_t i = 0; i < step.produced.size(); ++i) {
      const auto& p = step.produced[i];
      out << (i ? "," : " produced=") << ename(p.id) << "(" << vname(p.u) << "," << vname(p.v)
          << "," << to_string(p.length) << ")";
    }
    for (std::size_t i = 0; i < step.removed.size(); ++i) {
      out << (i ? "," : " removed=") << vname(step.removed[i]);
    }
    if (step.added) out << " added=" << vname(*step.added);
    out << "\n";
  }
  return 0;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  const auto family = family_from_name(o.family);
  if (!family) throw std::invalid_argument("unknown family '" + o.family + "'");
  out << closed_form(*family, o.n, o.a) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  GraphGenSpec spec;
  spec.seed = o.seed;
  spec.lengths = o.unit ? LengthMode::unit : LengthMode::small_rational;
  const std::vector<std::string> tags = o.tags.empty() ? registered_tags() : split(o.tags, ',');
  SuiteOptions options;
  options.cap = o.cap;
  options.exhaustive = o.exhaustive;
  const SuiteResult result = run_suite(spec, tags, o.count, options);
  std::size_t failed = 0;
  for (const auto& report : result.reports) {
    out << to_line(report) << "\n";
    if (!report.pass) ++failed;
  }
  err << result.reports.size() << " reports, " << failed << " failed";
  for (const auto& [tag, n] : result.skipped) err << ", " << tag << " skipped " << n;
  err << "\n";
  return failed == 0 ? 0 : kExitFailedReport;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact effective resistance, voltages and spanning-tree counts", "kirchhoff"};
  app.require_subcommand(1);
  Options o;

  auto* resistance = app.add_subcommand("resistance", "r(p,q) as num/den and decimal");
  resistance->add_option("file", o.file)->required();
  resistance->add_option("vertices", o.vertices, "p q")->required()->expected(2);

  auto* voltage = app.add_subcommand("voltage", "j_z(x,y) as num/den and decimal");
  voltage->add_option("file", o.file)->required();
  voltage->add_option("vertices", o.vertices, "z x y")->required()->expected(3);

  auto* spantree = app.add_subcommand("spantree", "number of spanning trees");
  spantree->add_option("file", o.file)->required();
  spantree->add_option("--method", o.method)
      ->check(CLI::IsMember({"matrix", "dc", "enum", "vertex-del"}));

  auto* ident = app.add_subcommand("identify", "merge vertex groups such as p,q");
  ident->add_option("file", o.file)->required();
  ident->add_option("groups", o.groups)->required();

  auto* euler = app.add_subcommand("euler", "per-edge decomposition of r(s,t)");
  euler->add_option("file", o.file)->required();
  euler->add_option("vertices", o.vertices, "s t")->required()->expected(2);
  euler->add_option("--form", o.form)->check(CLI::IsMember({"I", "II"}));

  auto* derivative = app.add_subcommand("derivative", "dr(s,t)/dL_e, exact and finite difference");
  derivative->add_option("file", o.file)->required();
  derivative->add_option("edge", o.edge)->required();
  derivative->add_option("vertices", o.vertices, "s t")->required()->expected(2);

  auto* reduce = app.add_subcommand("reduce", "series, parallel and Delta-Y reduction");
  reduce->add_option("file", o.file)->required();
  reduce->add_option("vertices", o.vertices, "s t")->required()->expected(2);

  auto* closed = app.add_subcommand("closed-form", "t(G) of a standard family");
  closed->add_option("family", o.family, "path|cycle|banana|complete|fan|wheel")->required();
  closed->add_option("n", o.n)->required();
  closed->add_option("a", o.a, "spoke multiplicity for fan and wheel");

  auto* verify = app.add_subcommand("verify", "run the identity suite on random graphs");
  verify->add_option("--seed", o.seed);
  verify->add_option("--count", o.count);
  verify->add_option("--cap", o.cap);
  verify->add_option("--tags", o.tags, "comma-separated; default all");
  verify->add_flag("--exhaustive", o.exhaustive);
  verify->add_flag("--unit", o.unit, "unit edge lengths only");

  std::vector<std::string> argv_storage{"kirchhoff"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (resistance->parsed()) return cmd_resistance(o, out);
    if (voltage->parsed()) return cmd_voltage(o, out);
    if (spantree->parsed()) return cmd_spantree(o, out);
    if (ident->parsed()) return cmd_identify(o, out);
    if (euler->parsed()) return cmd_euler(o, out);
    if (derivative->parsed()) return cmd_derivative(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (closed->parsed()) return cmd_closed_form(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const GraphFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const UnknownVertexError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknownId;
  } catch (const UnknownEdgeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknownId;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  } catch (const InvalidPartitionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}

}  // namespace kirchhoff
