// Command-line front end: classify, solve, verify, construct, fixtures,
// sweep, claims, hunt, weights. JSON goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 completed (whatever the verdict), 1 usage or input error,
// 2 CONSTRUCTION_FAILED.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subpack/subpack.hpp"

namespace {

using nlohmann::json;
using namespace subpack;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConstruction = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

// Fixture name, then literal graph6, then a file holding graph6 or an
// edge list.
Graph resolve_graph(const std::string& arg) {
  if (is_fixture_name(arg)) return fixture(arg).graph;
  try {
    return parse_graph6(arg);
  } catch (const Error& e) {
    if (!file_exists(arg)) {
      throw Error(e.code(), "'" + arg + "' is not a fixture name, a readable file or valid graph6 (" + e.what() + ")");
    }
  }
  const std::string text = read_file(arg);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(Errc::io, "'" + arg + "' is empty");
  if (std::isdigit(static_cast<unsigned char>(text[first]))) return parse_edge_list(text);
  std::istringstream lines(text.substr(first));
  std::string line;
  std::getline(lines, line);
  return parse_graph6(line);
}

json facts_json(const Graph& g) {
  json j{{"graph6", emit_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"subcubic", g.max_degree() <= 3}};
  if (g.order() > 0) j["average_degree"] = average_degree(g).str();
  if (g.max_degree() > 3) return j;
  const auto p = profile(g);
  std::vector<int> heavy;
  for (int v = 0; v < g.order(); ++v) {
    if (p.heavy[v]) heavy.push_back(v);
  }
  std::vector<std::string> classes;
  for (const char* tag : {"sat0", "sat1", "sat2", "sat3", "hsat0", "hsat1", "hsat2", "hsat3", "cubic"}) {
    if (in_class(g, ClassTag::parse(tag))) classes.emplace_back(tag);
  }
  j["degrees"] = p.degree;
  j["heavy"] = heavy;
  j["sat_level"] = p.sat_level;
  j["heavy_sat_level"] = p.heavy_sat_level;
  j["cubic"] = in_class(g, ClassTag::cubic());
  j["classes"] = classes;
  return j;
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"x", v.x}, {"y", v.y}, {"class", v.cls}, {"dist", v.dist}});
  return out;
}

json claims_json(const ClaimReport& r) {
  json out = json::array();
  for (const auto& c : r.checks()) {
    out.push_back({{"name", c.name}, {"checked", c.checked}, {"violated", c.violated}, {"skipped", c.skipped}});
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::set<std::string> exclusion_codes(const std::vector<std::string>& items) {
  std::set<std::string> out;
  for (const auto& item : items) out.insert(canonical_code(resolve_graph(item)));
  return out;
}

std::vector<Graph> sweep_source(int nmax, const std::string& corpus) {
  return corpus.empty() ? enumerate_up_to(nmax) : ingest_graph6(corpus);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-packing colourings of subcubic graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  std::string graph_arg;
  std::string seq_arg;
  std::string class_arg = "any";
  std::string ledger_path;
  std::string corpus;
  std::string coloring_path;
  std::string method;
  std::string alpha_arg = "7/10";
  std::string beta_arg = "7/20";
  std::vector<std::string> exclude;
  std::uint64_t budget = kDefaultBudget;
  int nmax = 8;
  int workers = 0;
  bool as_json = false;
  bool no_pipeline = false;

  auto* classify = app.add_subcommand("classify", "degree profile and saturation classes");
  classify->add_option("graph", graph_arg, "fixture name, graph6 or file")->required();

  auto* solve = app.add_subcommand("solve", "decide S-packing colourability");
  solve->add_option("graph", graph_arg, "fixture name, graph6 or file")->required();
  solve->add_option("--seq", seq_arg, "packing sequence, e.g. 1,2^5")->required();
  solve->add_option("--budget", budget, "search node limit");

  auto* verify = app.add_subcommand("verify", "check a colouring certificate");
  verify->add_option("graph", graph_arg, "fixture name, graph6 or file")->required();
  verify->add_option("--seq", seq_arg, "packing sequence")->required();
  verify->add_option("--coloring", coloring_path, "file with v:class pairs")->required();

  auto* construct = app.add_subcommand("construct", "run a constructive colouring procedure");
  construct->add_option("graph", graph_arg, "fixture name, graph6 or file")->required();
  construct->add_option("--method", method, "1133 | 1sat-12e4 | 30sat-12e5")
      ->required()
      ->check(CLI::IsMember({"1133", "1sat-12e4", "30sat-12e5"}));

  auto* fixtures = app.add_subcommand("fixtures", "dump or re-check the named graphs");
  std::string fixtures_action = "export";
  fixtures->add_option("action", fixtures_action, "export | check")->check(CLI::IsMember({"export", "check"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "decide every graph of a class");
  sweep_cmd->add_option("--class", class_arg, "sat0..sat3, hsat0..hsat3, cubic, any");
  sweep_cmd->add_option("--seq", seq_arg, "packing sequence")->required();
  sweep_cmd->add_option("--nmax", nmax, "largest order enumerated");
  sweep_cmd->add_option("--corpus", corpus, "graph6 file used instead of the enumeration");
  sweep_cmd->add_option("--ledger", ledger_path, "JSON-lines ledger to append to")->required();
  sweep_cmd->add_option("--budget", budget, "search node limit per graph");
  sweep_cmd->add_option("--workers", workers, "worker threads, 0 = all cores");
  sweep_cmd->add_flag("--no-pipeline", no_pipeline, "skip the matching constructive procedure");
  sweep_cmd->add_flag("--json", as_json, "JSON summary");

  auto* claims = app.add_subcommand("claims", "re-check every statement up to nmax");
  claims->add_option("--nmax", nmax, "largest order enumerated");
  claims->add_option("--budget", budget, "search node limit per graph");
  claims->add_option("--workers", workers, "worker threads, 0 = all cores");
  claims->add_option("--ledger", ledger_path, "JSON-lines ledger to append to");
  claims->add_flag("--json", as_json, "JSON report");

  auto* hunt = app.add_subcommand("hunt", "search for a graph of a class that is not S-colourable");
  hunt->add_option("--class", class_arg, "class tag");
  hunt->add_option("--seq", seq_arg, "packing sequence")->required();
  hunt->add_option("--nmax", nmax, "largest order enumerated");
  hunt->add_option("--exclude", exclude, "graphs to ignore (fixture names, graph6 or files)")->delimiter(',');
  hunt->add_option("--ledger", ledger_path, "JSON-lines ledger to append to");
  hunt->add_option("--budget", budget, "search node limit per graph");
  hunt->add_option("--workers", workers, "worker threads, 0 = all cores");
  hunt->add_flag("--json", as_json, "JSON result");

  auto* weights = app.add_subcommand("weights", "partition scheme under other independent-set weights");
  weights->add_option("--alpha", alpha_arg, "grid of X0 weights, e.g. 0.6,7/10");
  weights->add_option("--beta", beta_arg, "grid of Y weights");
  weights->add_option("--seq", seq_arg, "target (1,1,a,b) sequence")->required();
  weights->add_option("--nmax", nmax, "largest order enumerated");
  weights->add_option("--workers", workers, "worker threads, 0 = all cores");
  weights->add_flag("--json", as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      print(facts_json(resolve_graph(graph_arg)));
    } else if (solve->parsed()) {
      const Graph g = resolve_graph(graph_arg);
      const auto seq = PackingSequence::parse(seq_arg);
      const auto r = decide_colorable(g, seq, budget);
      json j{{"verdict", verdict_name(r.verdict)}, {"sequence", seq.compact()}, {"graph6", emit_graph6(g)},
             {"nodes", r.nodes}};
      if (r.feasible()) j["certificate"] = r.coloring.certificate();
      print(j);
    } else if (verify->parsed()) {
      const Graph g = resolve_graph(graph_arg);
      const auto seq = PackingSequence::parse(seq_arg);
      const auto c = PackingColoring::parse_certificate(read_file(coloring_path), g.order());
      const auto v = verify_coloring(g, seq, c);
      print({{"ok", v.empty()}, {"sequence", seq.compact()}, {"violations", violations_json(v)}});
    } else if (construct->parsed()) {
      const Graph g = resolve_graph(graph_arg);
      const Pipeline p = parse_pipeline(method);
      try {
        const auto out = run_pipeline(p, g);
        print({{"method", method},
               {"ok", true},
               {"sequence", pipeline_sequence(p).compact()},
               {"graph6", emit_graph6(g)},
               {"certificate", out.coloring.certificate()},
               {"claims", claims_json(out.claims)}});
      } catch (const Error& e) {
        if (e.code() != Errc::construction_failed) throw;
        std::cerr << e.what() << "\n";
        print({{"method", method}, {"ok", false}, {"graph6", emit_graph6(g)}, {"error", e.what()}});
        return kExitConstruction;
      }
    } else if (fixtures->parsed()) {
      for (const auto& name : fixture_names()) {
        const auto f = fixture(name);
        if (fixtures_action == "export") {
          json j = facts_json(f.graph);
          j["name"] = f.name;
          j["vertex_names"] = f.vertex_names;
          j["note"] = f.note;
          if (f.coloring) {
            j["coloring"] = f.coloring->certificate();
            j["coloring_sequence"] = f.coloring_sequence->compact();
          }
          std::cout << j.dump() << "\n";
        } else {
          const auto p = profile(f.graph);
          bool ok = p.sat_level == f.sat_level && p.heavy_sat_level == f.heavy_sat_level &&
                    in_class(f.graph, ClassTag::cubic()) == f.cubic;
          if (f.coloring) ok = ok && is_valid_coloring(f.graph, *f.coloring_sequence, *f.coloring);
          std::cout << (ok ? "PASS " : "FAIL ") << name << " n=" << f.graph.order() << " m=" << f.graph.size()
                    << " sat=" << p.sat_level << " hsat=" << p.heavy_sat_level << "\n";
        }
      }
    } else if (sweep_cmd->parsed()) {
      SweepOptions opt;
      opt.tag = ClassTag::parse(class_arg);
      opt.seq = PackingSequence::parse(seq_arg);
      opt.budget = budget;
      opt.workers = workers;
      opt.run_pipeline = !no_pipeline;
      json config = opt.to_json();
      config["command"] = "sweep";
      config["nmax"] = nmax;
      config["corpus"] = corpus;
      Ledger ledger(ledger_path, config);
      const auto s = sweep(sweep_source(nmax, corpus), opt, &ledger);
      if (as_json) {
        print(s.to_json());
      } else {
        std::cout << s.total << " graphs: " << s.feasible << " feasible, " << s.infeasible << " infeasible, "
                  << s.budget << " budget, " << s.skipped << " skipped, " << s.errors << " errors\n";
        if (s.pipeline_ok + s.pipeline_failed) {
          std::cout << "pipeline: " << s.pipeline_ok << " verified, " << s.pipeline_failed << " failed\n";
        }
        for (const auto& r : s.infeasible_records) std::cout << "infeasible " << r.graph6 << "\n";
      }
      if (s.pipeline_failed) return kExitConstruction;
    } else if (claims->parsed()) {
      std::optional<Ledger> ledger;
      if (!ledger_path.empty()) ledger.emplace(ledger_path, json{{"command", "claims"}, {"nmax", nmax}, {"budget", budget}});
      const auto rep = check_claims(nmax, workers, budget, ledger ? &*ledger : nullptr);
      if (as_json) {
        json j = rep.to_json();
        j["structure"] = claims_json(rep.structure);
        print(j);
      } else {
        for (const auto& r : rep.results) {
          std::printf("%s %-40s %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
        }
        std::cout << rep.structure.str();
      }
    } else if (hunt->parsed()) {
      SweepOptions opt;
      opt.tag = ClassTag::parse(class_arg);
      opt.seq = PackingSequence::parse(seq_arg);
      opt.budget = budget;
      opt.workers = workers;
      opt.exclude = exclusion_codes(exclude);
      std::optional<Ledger> ledger;
      json config = opt.to_json();
      config["command"] = "hunt";
      config["nmax"] = nmax;
      if (!ledger_path.empty()) ledger.emplace(ledger_path, config);
      const auto h = search_counterexample(opt, nmax, ledger ? &*ledger : nullptr);
      if (as_json) {
        print(h.to_json());
      } else {
        std::cout << h.status << " after " << h.decided << " graphs up to n=" << nmax;
        if (h.status == "found") std::cout << ": " << h.graph6;
        std::cout << "\n";
      }
    } else if (weights->parsed()) {
      const auto cells =
          phi_weight_experiment(parse_grid(alpha_arg), parse_grid(beta_arg), PackingSequence::parse(seq_arg), nmax, workers);
      if (as_json) {
        json list = json::array();
        for (const auto& c : cells) list.push_back(c.to_json());
        print({{"sequence", PackingSequence::parse(seq_arg).compact()}, {"nmax", nmax}, {"cells", list}});
      } else {
        for (const auto& c : cells) {
          std::cout << "alpha " << c.alpha.str() << " beta " << c.beta.str() << " weights " << c.weights.str() << ": "
                    << c.successes << "/" << c.graphs << " verified";
          if (!c.failing.empty()) std::cout << ", first failure " << c.failing.front();
          std::cout << "\n";
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Errc::construction_failed ? kExitConstruction : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
