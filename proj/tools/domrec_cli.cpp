// domrec: command-line front end for domination reconfiguration experiments.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "domrec/budget.hpp"
#include "domrec/domination.hpp"
#include "domrec/errors.hpp"
#include "domrec/families.hpp"
#include "domrec/graph.hpp"
#include "domrec/io.hpp"
#include "domrec/reconfig.hpp"
#include "domrec/separation.hpp"

namespace {

using namespace domrec;
using io::Json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kBudget = 3,
  kAssertion = 4,
  kDomain = 5,
};

/// Raised when a cross-check or lemma verification fails after output was written.
struct AssertionFailed : Error {
  using Error::Error;
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

struct Options {
  std::string input = "-";
  bool ir = false;
  std::optional<std::uint64_t> budget;
  std::string method = "direct";
  bool oracle = false;
  int k = -1;
  int r = -1;
  int n = -1;
  std::string export_format;
  bool diameter = false;
  std::string from, to;
  std::string family;
  int max_n = 10;
  int min_excess = 2;
};

Budget effective_budget(const Options& o) {
  Budget b = Budget::from_env();
  if (o.budget) b.max_work = *o.budget;
  return b;
}

int run_invariants(const Options& o) {
  InvariantOptions opts;
  opts.budget = effective_budget(o);
  opts.ir = o.ir ? IrMode::Force : IrMode::Auto;
  for (const auto& in : io::read_graphs_from(o.input)) emit(io::to_json(invariant_report(in.graph, opts)));
  return kOk;
}

int run_d0(const Options& o) {
  if (o.method != "direct" && o.method != "sep" && o.method != "both")
    throw DomainError("--method must be direct, sep or both");
  const Budget budget = effective_budget(o);
  bool disagreement = false;
  for (const auto& in : io::read_graphs_from(o.input)) {
    const DomFamily fam = enumerate_minimal_dominating(in.graph, budget);
    if (in.graph.size() == 0) throw DomainError("d0 requires a graph with at least one edge");
    Json j;
    std::optional<int> d0, sep;
    if (o.method != "sep") d0 = d0_direct(in.graph, fam, budget);
    if (o.method != "direct") sep = sep_bottleneck(fam).sep;
    if (d0) j["d0"] = *d0;
    if (sep) j["sep"] = *sep;
    if (d0 && sep) {
      j["agree"] = *d0 == *sep;
      disagreement = disagreement || *d0 != *sep;
    }
    emit(j);
  }
  if (disagreement) throw AssertionFailed("d0 and sep disagree");
  return kOk;
}

int run_profile(const Options& o) {
  const Budget budget = effective_budget(o);
  for (const auto& in : io::read_graphs_from(o.input))
    emit(io::to_json(connectivity_profile(in.graph, budget)));
  return kOk;
}

int run_sep(const Options& o) {
  const Budget budget = effective_budget(o);
  bool disagreement = false;
  for (const auto& in : io::read_graphs_from(o.input)) {
    const DomFamily fam = enumerate_minimal_dominating(in.graph, budget);
    const SepReport report = sep_bottleneck(fam);
    Json j = io::to_json(report, fam);
    if (o.oracle) {
      const SepReport brute = sep_brute_force(fam);
      j["oracle"] = {{"sep", brute.sep}, {"agree", brute.sep == report.sep}};
      disagreement = disagreement || brute.sep != report.sep;
    }
    emit(j);
  }
  if (disagreement) throw AssertionFailed("bottleneck and brute-force separation disagree");
  return kOk;
}

int run_dk(const Options& o) {
  if (o.k < 0) throw DomainError("--k is required");
  const Budget budget = effective_budget(o);
  for (const auto& in : io::read_graphs_from(o.input)) {
    const ReconfigGraph rg = build_dk(in.graph, o.k, budget);
    std::optional<int> diameter;
    if (o.diameter) diameter = dk_diameter(rg);
    if (o.export_format == "dot") {
      std::string dot = io::export_dot(rg);
      if (o.diameter) {
        dot.insert(dot.size() - 2, "  // diameter: " + (diameter ? std::to_string(*diameter) : "none") + "\n");
      }
      std::cout << dot;
      continue;
    }
    Json j = o.export_format == "json" ? io::to_json(rg) : io::summary_json(rg);
    if (o.diameter) j["diameter"] = diameter ? Json(*diameter) : Json(nullptr);
    emit(j);
  }
  return kOk;
}

int run_path(const Options& o) {
  if (o.k < 0) throw DomainError("--k is required");
  const Budget budget = effective_budget(o);
  for (const auto& in : io::read_graphs_from(o.input)) {
    const VertexSet a = in.graph.make_set(io::parse_id_list(o.from));
    const VertexSet b = in.graph.make_set(io::parse_id_list(o.to));
    const auto path = reconfig_path(in.graph, a, b, o.k, budget);
    Json j;
    j["k"] = o.k;
    j["from"] = io::ids_json(a);
    j["to"] = io::ids_json(b);
    j["found"] = path.has_value();
    j["length"] = path ? Json(path->size() - 1) : Json(nullptr);
    Json steps = Json::array();
    if (path)
      for (VertexSet s : *path) steps.push_back(io::ids_json(s));
    j["path"] = std::move(steps);
    emit(j);
  }
  return kOk;
}

int run_gen(const Options& o) {
  auto need = [](int value, const char* flag) {
    if (value < 0) throw DomainError(std::string(flag) + " is required for this family");
    return value;
  };
  const std::string& f = o.family;
  std::optional<Graph> g;
  if (f == "gkr") g = generate_gkr(need(o.k, "--k"), need(o.r, "--r")).graph;
  else if (f == "qkr") g = generate_qkr(need(o.k, "--k"), need(o.r, "--r")).graph;
  else if (f == "star") g = star_graph(need(o.n, "--n"));
  else if (f == "path") g = path_graph(need(o.n, "--n"));
  else if (f == "cycle") g = cycle_graph(need(o.n, "--n"));
  else if (f == "complete") g = complete_graph(need(o.n, "--n"));
  else if (f == "cartesian")
    // P_k box K_r; the defaults give P_3 box K_3.
    g = cartesian_product(path_graph(o.k < 0 ? 3 : o.k), complete_graph(o.r < 0 ? 3 : o.r));
  else
    throw DomainError("unknown family '" + f + "'");
  std::cout << io::export_graph6(*g) << '\n';
  return kOk;
}

int run_verify(const Options& o) {
  if (o.k < 0 || o.r < 0) throw DomainError("--k and --r are required");
  const Budget budget = effective_budget(o);
  const LemmaCheck check = o.family == "gkr" ? verify_gkr_lemmas(o.k, o.r, budget)
                                             : verify_qkr_lemmas(o.k, o.r, budget);
  emit(io::to_json(check));
  if (!check.passed()) throw AssertionFailed("lemma verification failed");
  return kOk;
}

struct HuntOutcome {
  std::optional<std::string> line;
  std::optional<std::string> failure;
  int exit_code = kOk;
};

HuntOutcome hunt_one(const std::string& text, std::size_t index, const Options& o,
                     const Budget& budget) {
  HuntOutcome out;
  try {
    const Graph g = io::parse_graph6(text);
    if (g.order() > o.max_n || g.size() == 0) return out;
    const DomFamily fam = enumerate_minimal_dominating(g, budget);
    const Theorem3Evidence ev = check_theorem3(g, budget);
    if (!ev.agree) {
      out.failure = "graph #" + std::to_string(index) + " (" + text + "): d0 = " +
                    std::to_string(ev.d0) + " but sep = " + std::to_string(ev.sep.sep);
      out.exit_code = kAssertion;
      return out;
    }
    const int excess = ev.d0 - ev.Gamma;
    if (excess < o.min_excess) return out;
    // Re-verify the hit with an independent direct computation before emitting.
    if (d0_direct(g, budget) != ev.d0 || sep_bottleneck(fam).sep != ev.sep.sep) {
      out.failure = "graph #" + std::to_string(index) + ": hit did not reproduce";
      out.exit_code = kAssertion;
      return out;
    }
    Json j;
    j["index"] = index;
    j["graph6"] = text;
    j["n"] = g.order();
    j["m"] = g.size();
    j["excess"] = excess;
    const Json evidence = io::to_json(ev, fam);
    for (const auto& [key, value] : evidence.items()) j[key] = value;
    out.line = j.dump();
  } catch (const ParseError& e) {
    out.failure = "graph #" + std::to_string(index) + ": " + e.what();
    out.exit_code = kParse;
  } catch (const BudgetExceeded& e) {
    out.failure = "graph #" + std::to_string(index) + ": " + e.what();
    out.exit_code = kBudget;
  }
  return out;
}

int run_hunt(const Options& o) {
  const Budget budget = effective_budget(o);
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  constexpr std::size_t kChunk = 4096;
  const auto started = std::chrono::steady_clock::now();

  std::size_t scanned = 0, hits = 0;
  int exit_code = kOk;
  std::vector<std::string> chunk;
  std::vector<HuntOutcome> results;
  std::string line;
  bool eof = false;
  while (!eof) {
    chunk.clear();
    while (chunk.size() < kChunk) {
      if (!std::getline(std::cin, line)) {
        eof = true;
        break;
      }
      if (line.starts_with(">>graph6<<")) line.erase(0, 10);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) chunk.push_back(line);
    }
    results.assign(chunk.size(), {});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < chunk.size(); i = next++)
        results[i] = hunt_one(chunk[i], scanned + i, o, budget);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    pool.clear();

    for (const auto& r : results) {
      if (r.line) {
        std::cout << *r.line << '\n';
        ++hits;
      }
      if (r.failure) {
        std::cerr << "hunt: " << *r.failure << '\n';
        if (exit_code == kOk) exit_code = r.exit_code;
      }
    }
    std::cout.flush();
    scanned += chunk.size();
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  std::cerr << "hunt: scanned " << scanned << " graphs, " << hits << " hits, " << elapsed.count()
            << " s\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination reconfiguration toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", o.input, "graph6 stream or edge list file, '-' for stdin")->required();
  };

  auto* invariants = app.add_subcommand("invariants", "gamma, Gamma, alpha, IR and coverage flags");
  add_input(invariants);
  invariants->add_flag("--ir", o.ir, "compute IR even above the automatic order limit");
  invariants->add_option("--budget", o.budget, "enumeration work limit");

  auto* d0 = app.add_subcommand("d0", "connectivity threshold of the k-dominating graphs");
  add_input(d0);
  d0->add_option("--method", o.method, "direct | sep | both")
      ->check(CLI::IsMember({"direct", "sep", "both"}));

  auto* profile = app.add_subcommand("profile", "connectivity of D_k for every k");
  add_input(profile);

  auto* sep = app.add_subcommand("sep", "separation of the minimal dominating sets");
  add_input(sep);
  sep->add_flag("--oracle", o.oracle, "also scan every 2-partition and compare");

  auto* dk = app.add_subcommand("dk", "build the k-dominating graph");
  add_input(dk);
  dk->add_option("--k", o.k, "cardinality cap")->required();
  dk->add_option("--export", o.export_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  dk->add_flag("--diameter", o.diameter, "report the diameter when connected");

  auto* path = app.add_subcommand("path", "shortest reconfiguration sequence");
  add_input(path);
  path->add_option("--from", o.from, "source dominating set, e.g. 0,3,5")->required();
  path->add_option("--to", o.to, "target dominating set")->required();
  path->add_option("--k", o.k, "cardinality cap")->required();

  auto* gen = app.add_subcommand("gen", "write a generated graph as graph6");
  gen->add_option("family", o.family, "gkr | qkr | star | path | cycle | complete | cartesian")
      ->required()
      ->check(CLI::IsMember({"gkr", "qkr", "star", "path", "cycle", "complete", "cartesian"}));
  gen->add_option("--k", o.k, "clique size (gkr, qkr) or path order (cartesian)");
  gen->add_option("--r", o.r, "leaf count (gkr, qkr) or clique order (cartesian)");
  gen->add_option("--n", o.n, "order parameter for star, path, cycle, complete");

  auto* verify = app.add_subcommand("verify", "check the structure of the minimal dominating sets");
  verify->add_option("family", o.family, "gkr | qkr")->required()->check(CLI::IsMember({"gkr", "qkr"}));
  verify->add_option("--k", o.k, "clique size")->required();
  verify->add_option("--r", o.r, "leaf count")->required();

  auto* hunt = app.add_subcommand("hunt", "scan a graph6 stream on stdin for d0 - Gamma >= E");
  hunt->add_option("--max-n", o.max_n, "skip graphs of larger order");
  hunt->add_option("--min-excess", o.min_excess, "minimum d0 - Gamma to report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*invariants) return run_invariants(o);
    if (*d0) return run_d0(o);
    if (*profile) return run_profile(o);
    if (*sep) return run_sep(o);
    if (*dk) return run_dk(o);
    if (*path) return run_path(o);
    if (*gen) return run_gen(o);
    if (*verify) return run_verify(o);
    if (*hunt) return run_hunt(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kBudget;
  } catch (const AssertionFailed& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kAssertion;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
