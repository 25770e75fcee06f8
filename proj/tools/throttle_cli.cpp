// Command-line front end: single computations, the reference-value suite,
// property suites, graph ingestion and the fixture catalog.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "throttle/constructive.hpp"
#include "throttle/graph_io.hpp"
#include "throttle/suites.hpp"

namespace {

using namespace throttle;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
  std::string fixture_name;
  std::string graph6;
  std::string file;
  std::string format = "edgelist";
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  auto* group = cmd->add_option_group("graph", "where the graph comes from");
  group->add_option("--fixture", src.fixture_name, "named fixture or family, e.g. family_6n7:K2");
  group->add_option("--graph6", src.graph6, "graph6 string");
  group->add_option("--file,--edgelist", src.file, "path to a graph file");
  group->require_option(1);
  cmd->add_option("--format", src.format, "file format")->check(CLI::IsMember({"graph6", "edgelist"}));
}

NamedGraph load_graph(const GraphSource& src) {
  if (!src.fixture_name.empty()) return fixture(src.fixture_name);
  if (!src.graph6.empty()) return NamedGraph{parse_graph6(src.graph6), {}, {}, {}, {}};
  std::ifstream in(src.file);
  if (!in) throw std::runtime_error("cannot open '" + src.file + "'");
  auto graphs = read_graphs(in, parse_format(src.format));
  if (graphs.size() != 1)
    throw std::runtime_error("expected one graph in '" + src.file + "', found " + std::to_string(graphs.size()));
  return NamedGraph{graphs.front(), {}, {}, {}, {}};
}

RuleKind parameter_rule(const std::string& name) {
  if (name == "Z") return RuleKind::StandardZF;
  if (name == "Zplus") return RuleKind::PSDZF;
  if (name == "gammaP") return RuleKind::PowerDomination;
  throw CLI::ValidationError("--parameter", "unknown parameter '" + name + "'");
}

int emit(const Report& report, bool json, bool failures_only) {
  if (json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    print_table(std::cout, report, failures_only);
  }
  return report.ok() ? kExitPass : kExitFail;
}

struct ComputeOptions {
  GraphSource src;
  std::string rule, kind, parameter;
  bool json = false, table = false, trace = false;
};

int run_compute(const ComputeOptions& o) {
  const NamedGraph g = load_graph(o.src);
  Json out = {{"graph", to_graph6(g.graph)}, {"order", g.graph.order()}};
  std::ostringstream text;

  if (!o.parameter.empty()) {
    if (o.parameter == "gamma") {
      const DominationResult d = domination_number(g.graph);
      out["parameter"] = "gamma";
      out["value"] = d.value;
      out["witness"] = to_json(d.witness);
      text << "gamma = " << d.value << "  witness " << d.witness.to_string() << '\n';
    } else {
      const RuleKind rule = parameter_rule(o.parameter);
      const ParameterResult p = parameter_number(rule, g.graph);
      out["parameter"] = o.parameter;
      out["value"] = p.value;
      out["witness"] = to_json(p.witness);
      text << o.parameter << " = " << p.value << "  witness " << p.witness.to_string() << '\n';
      if (o.trace) {
        const PropagationTrace t = propagate(rule, g.graph, p.witness);
        out["trace"] = to_json(t);
        for (std::size_t i = 0; i < t.fills.size(); ++i)
          text << "  step " << i + 1 << ": " << t.fills[i].to_string() << '\n';
      }
    }
  } else {
    if (o.rule.empty() || o.kind.empty())
      throw CLI::ValidationError("compute", "give --rule and --kind, or --parameter");
    const RuleKind rule = parse_rule(o.rule);
    const ThrottlingKind kind = parse_kind(o.kind);
    const ThrottlingResult r = throttle::throttle(rule, kind, g.graph, o.table);
    out["result"] = to_json(r);
    text << "th[" << to_string(rule) << ", " << to_string(kind) << "] = " << r.value << "  witness "
         << r.witness.to_string() << "  pt " << r.witness_pt << '\n';
    if (o.table) {
      for (std::size_t k = 0; k < r.per_k.size(); ++k)
        text << "  k=" << k + 1 << ": " << (r.per_k[k] ? std::to_string(*r.per_k[k]) : "inf") << '\n';
    }
    if (o.trace) {
      const PropagationTrace t = propagate(rule, g.graph, r.witness);
      out["trace"] = to_json(t);
      for (std::size_t i = 0; i < t.fills.size(); ++i)
        text << "  step " << i + 1 << ": " << t.fills[i].to_string() << '\n';
    }
  }
  if (o.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text.str();
  }
  return kExitPass;
}

int run_ingest(const std::string& path, const std::string& format, bool json) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  const auto graphs = read_graphs(in, parse_format(format));
  int connected = 0;
  for (const Graph& g : graphs) connected += is_connected(g);
  if (json) {
    std::cout << Json{{"path", path}, {"graphs", graphs.size()}, {"connected", connected}}.dump(2) << '\n';
  } else {
    std::cout << graphs.size() << " graphs (" << connected << " connected)\n";
  }
  return kExitPass;
}

int run_families(bool json) {
  if (json) {
    std::cout << Json(fixture_names()).dump(2) << '\n';
    return kExitPass;
  }
  for (const std::string& name : fixture_names()) std::cout << name << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact throttling numbers for zero forcing, PSD forcing and power domination"};
  app.set_version_flag("--version", std::string(THROTTLE_VERSION));
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* cmd_compute = app.add_subcommand("compute", "compute one throttling number or parameter");
  add_graph_options(cmd_compute, compute.src);
  cmd_compute->add_option("--rule", compute.rule, "zf, psd or pd")->check(CLI::IsMember({"zf", "psd", "pd"}));
  cmd_compute->add_option("--kind", compute.kind, "sum, prodx or prodstar")
      ->check(CLI::IsMember({"sum", "prodx", "prodstar"}));
  cmd_compute->add_option("--parameter", compute.parameter, "gamma, Z, Zplus or gammaP")
      ->check(CLI::IsMember({"gamma", "Z", "Zplus", "gammaP"}))
      ->excludes("--rule")
      ->excludes("--kind");
  cmd_compute->add_flag("--json", compute.json, "JSON output");
  cmd_compute->add_flag("--table", compute.table, "print th(G, k) for every k");
  cmd_compute->add_flag("--trace", compute.trace, "print the witness propagation");

  std::vector<std::string> filters;
  bool suite_json = false, failures_only = false;
  auto* cmd_paper = app.add_subcommand("paper-suite", "check every reference value");
  cmd_paper->add_option("--filter", filters, "key=value tag filter, repeatable");
  cmd_paper->add_flag("--json", suite_json, "JSON report");
  cmd_paper->add_flag("--failures", failures_only, "print failing records only");

  std::string suite;
  int nmax = 7, samples = 200;
  unsigned long long seed = 20240601;
  auto* cmd_props = app.add_subcommand("props", "run a property suite");
  std::vector<std::string> suite_names;
  for (const auto& s : property_suites()) suite_names.push_back(s.name);
  cmd_props->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names));
  cmd_props->add_option("--nmax", nmax, "largest order")->check(CLI::Range(1, 9));
  cmd_props->add_option("--samples", samples, "samples per order above the exhaustive range")
      ->check(CLI::NonNegativeNumber);
  cmd_props->add_option("--seed", seed, "sampling seed");
  cmd_props->add_flag("--json", suite_json, "JSON report");
  cmd_props->add_flag("--failures", failures_only, "print failing records only");

  std::string ingest_path, ingest_format = "graph6";
  bool ingest_json = false;
  auto* cmd_ingest = app.add_subcommand("ingest", "parse a graph file and report the count");
  cmd_ingest->add_option("path", ingest_path, "input file")->required();
  cmd_ingest->add_option("--format", ingest_format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd_ingest->add_flag("--json", ingest_json, "JSON output");

  bool families_json = false;
  auto* cmd_families = app.add_subcommand("families", "fixture catalog");
  auto* cmd_list = cmd_families->add_subcommand("list", "list fixture names");
  cmd_list->add_flag("--json", families_json, "JSON output");
  cmd_families->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*cmd_compute) return run_compute(compute);
    if (*cmd_paper) {
      std::vector<std::pair<std::string, std::string>> parsed;
      for (const std::string& f : filters) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: filter '" << f << "' is not key=value\n";
          return kExitUsage;
        }
        parsed.emplace_back(f.substr(0, eq), f.substr(eq + 1));
      }
      return emit(run_reference_suite(parsed, worker_count()), suite_json, failures_only);
    }
    if (*cmd_props) return emit(run_property_suite(suite, nmax, samples, worker_count(), seed), suite_json, failures_only);
    if (*cmd_ingest) return run_ingest(ingest_path, ingest_format, ingest_json);
    if (*cmd_families) return run_families(families_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
