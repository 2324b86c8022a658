#include "lec/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include "lec/cip.hpp"
#include "lec/exact_oracle.hpp"
#include "lec/fan_solver.hpp"
#include "lec/hall.hpp"
#include "lec/rng.hpp"

namespace lec {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << text;
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json load_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_json(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ListsFile load_lists(const std::string& path) {
  try {
    return lists_from_json(load_json(path));
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + what);
  }
}

// Sends output to the -o file when given, otherwise to the stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

Json repro_bundle(const Graph& g, const ListAssignment& lists, const SolveFailure& f) {
  Json j;
  j["graph"] = serialize_graph(g);
  j["lists"] = lists_to_json(lists);
  j["edge"] = f.edge();
  j["reason"] = f.reason();
  j["trace"] = f.trace();
  return j;
}

class DotCollector : public SolverObserver {
 public:
  void on_interchange(const Cip& cip) override {
    text_ += cip_to_dot(cip, "cip" + std::to_string(count_++));
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::size_t count_ = 0;
};

struct Common {
  std::string output;
  std::uint64_t seed = 0;
};

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind = "random";
  std::size_t n = 10;
  std::size_t a = 2;
  std::size_t b = 2;
  double p = 0.5;
  std::string lists_out;
  std::size_t list_size = 0;
  std::size_t palette = 0;
  bool total = false;
};

int cmd_gen(const GenArgs& args, const Common& common, std::ostream& out) {
  Graph g;
  if (args.kind == "path") {
    g = path_graph(args.n);
  } else if (args.kind == "cycle") {
    g = cycle_graph(args.n);
  } else if (args.kind == "complete") {
    g = complete_graph(args.n);
  } else if (args.kind == "bipartite") {
    g = complete_bipartite_graph(args.a, args.b);
  } else if (args.kind == "petersen") {
    g = petersen_graph();
  } else if (args.kind == "random") {
    if (args.p < 0.0 || args.p > 1.0) throw InputError("--p must lie in [0, 1]");
    g = random_graph(args.n, args.p, common.seed);
  } else {
    throw InputError("unknown graph kind \"" + args.kind + "\"");
  }
  if (!args.lists_out.empty()) {
    const std::size_t k = args.list_size ? args.list_size : max_degree(g) + (args.total ? 4 : 2);
    const std::size_t palette = args.palette ? args.palette : 2 * k;
    Json lists = args.total ? lists_to_json(random_total_lists(g, k, palette, common.seed))
                            : lists_to_json(random_lists(g, k, palette, common.seed));
    write_file(args.lists_out, dump_json(lists));
  }
  emit(common.output, serialize_graph(g), out);
  return kExitOk;
}

// ---- colour-edges ----------------------------------------------------------

struct ColourArgs {
  std::string graph;
  std::string lists;
  std::size_t uniform = 0;
  std::size_t random = 0;
  std::size_t palette = 0;
  bool force = false;
  std::string trace;
  std::string dot;
  std::string repro = "lec-repro.json";
  std::size_t node_limit = 2'000'000;
};

int cmd_colour_edges(const ColourArgs& args, const Common& common, std::ostream& out,
                     std::ostream& err) {
  const Graph g = load_graph(args.graph);
  const int sources = !args.lists.empty() + (args.uniform > 0) + (args.random > 0);
  if (sources != 1) throw InputError("give exactly one of --lists, --uniform, --random");
  ListAssignment lists;
  if (!args.lists.empty()) {
    lists = load_lists(args.lists).edge_lists;
  } else if (args.uniform) {
    lists = uniform_lists(g, args.uniform);
  } else {
    const std::size_t palette = args.palette ? args.palette : 2 * args.random;
    lists = random_lists(g, args.random, palette, common.seed);
  }
  require_matching(g, lists);

  SolverOptions options;
  options.force = args.force;
  options.cip_node_limit = args.node_limit;
  std::ofstream trace_file;
  std::unique_ptr<TextCipTracer> tracer;
  if (!args.trace.empty()) {
    trace_file.open(args.trace, std::ios::binary);
    if (!trace_file) throw InputError(args.trace + ": cannot write file");
    tracer = std::make_unique<TextCipTracer>(trace_file);
    options.tracer = tracer.get();
  }
  DotCollector dot;
  if (!args.dot.empty()) options.observer = &dot;

  try {
    SolveResult result = colour_edges(g, lists, options);
    if (auto bad = check_edge_colouring(g, lists, result.colouring)) {
      err << "error: checker rejected the colouring: " << bad->message << '\n';
      return kExitFailure;
    }
    if (!args.dot.empty()) write_file(args.dot, dot.text());
    emit(common.output,
         dump_json(colouring_to_json(result.colouring, std::nullopt,
                                     report_to_json(result.report))),
         out);
    return kExitOk;
  } catch (const SolveFailure& f) {
    if (trace_file.is_open()) trace_file.flush();
    write_file(args.repro, dump_json(repro_bundle(g, lists, f)));
    err << "error: " << f.what() << " (reproduction bundle written to " << args.repro << ")\n";
    return kExitFailure;
  }
}

// ---- colour-total ----------------------------------------------------------

struct TotalArgs {
  std::string graph;
  std::string lists;
  std::size_t palette = 0;
};

int cmd_colour_total(const TotalArgs& args, const Common& common, std::ostream& out,
                     std::ostream& err) {
  const Graph g = load_graph(args.graph);
  if (args.lists.empty() == (args.palette == 0)) throw InputError("give exactly one of --lists, --palette");
  TotalColouring tc;
  TotalListAssignment lists;
  try {
    if (args.palette) {
      tc = total_colour(g, args.palette);
      lists = uniform_total_lists(g, args.palette);
    } else {
      ListsFile file = load_lists(args.lists);
      if (!file.vertex_lists) throw InputError(args.lists + ": vertex_lists are required");
      lists = TotalListAssignment{file.edge_lists, *file.vertex_lists};
      tc = total_colour_lists(g, lists);
    }
  } catch (const SolveFailure& f) {
    err << "error: " << f.what() << '\n';
    return kExitFailure;
  }
  if (auto bad = check_total_colouring(g, lists, tc)) {
    err << "error: checker rejected the total colouring: " << bad->message << '\n';
    return kExitFailure;
  }
  emit(common.output, dump_json(colouring_to_json(tc.edge_colours, tc.vertex_colours)), out);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string colouring;
  std::string lists;
};

int cmd_verify(const VerifyArgs& args, const Common& common, std::ostream& out) {
  const Graph g = load_graph(args.graph);
  ColouringFile col;
  try {
    col = colouring_from_json(load_json(args.colouring));
  } catch (const InputError& e) {
    throw InputError(args.colouring + ": " + e.what());
  }
  if (col.edge_colours.size() != g.num_edges()) {
    throw InputError(args.colouring + ": expected " + std::to_string(g.num_edges()) +
                     " edge colours");
  }
  if (col.vertex_colours && col.vertex_colours->size() != g.num_vertices()) {
    throw InputError(args.colouring + ": expected " + std::to_string(g.num_vertices()) +
                     " vertex colours");
  }
  std::optional<ListsFile> lists;
  if (!args.lists.empty()) lists = load_lists(args.lists);

  CheckResult result;
  if (col.vertex_colours) {
    TotalColouring tc{*col.vertex_colours, col.edge_colours};
    if (lists) {
      if (!lists->vertex_lists) throw InputError(args.lists + ": vertex_lists are required");
      result = check_total_colouring(g, TotalListAssignment{lists->edge_lists, *lists->vertex_lists}, tc);
    } else {
      result = check_total_properness(g, tc);
    }
  } else if (lists) {
    result = check_edge_colouring(g, lists->edge_lists, col.edge_colours);
  } else {
    result = check_edge_properness(g, as_partial(col.edge_colours));
  }
  Json j;
  j["ok"] = !result.has_value();
  if (result) j["violation"] = violation_to_json(*result);
  emit(common.output, dump_json(j), out);
  return result ? kExitFailure : kExitOk;
}

// ---- exact -----------------------------------------------------------------

struct ExactArgs {
  std::string graph;
  std::string lists;
  std::uint64_t node_limit = 100'000'000;
  std::size_t edge_guard = 24;
  std::size_t vertex_guard = 20;
};

template <class F>
Json guarded(F&& f) {
  try {
    return f();
  } catch (const GuardExceeded& e) {
    return Json{{"error", "guard exceeded"}, {"detail", e.what()}};
  } catch (const BudgetExceeded& e) {
    return Json{{"error", "budget exceeded"}, {"detail", e.what()}};
  }
}

int cmd_exact(const ExactArgs& args, const Common& common, std::ostream& out) {
  const Graph g = load_graph(args.graph);
  OracleBudget budget;
  budget.node_limit = args.node_limit;
  Json j;
  j["chi_prime"] = guarded([&] { return Json(chromatic_index(g, budget, args.edge_guard)); });
  j["chi_prime_2"] =
      guarded([&] { return Json(improper2_chromatic_index(g, budget, args.edge_guard)); });
  j["alpha_prime"] = matching_number(g);
  j["alpha_T"] = guarded([&] { return Json(total_independence_number(g, args.vertex_guard)); });
  if (!args.lists.empty()) {
    const ListAssignment lists = load_lists(args.lists).edge_lists;
    require_matching(g, lists);
    const auto r = list_edge_colourable(g, lists, budget);
    Json c;
    c["verdict"] = r.verdict == Verdict::yes ? "yes" : r.verdict == Verdict::no ? "no" : "budget_exceeded";
    if (r.witness) c["witness"] = *r.witness;
    c["nodes"] = r.nodes;
    j["list_colourable"] = c;
  }
  emit(common.output, dump_json(j), out);
  return kExitOk;
}

// ---- hall ------------------------------------------------------------------

struct HallArgs {
  std::string graph;
  bool edge = false;
  bool total = false;
  std::string check;
  bool via_lists = false;
  bool all_subsets = false;
  std::size_t guard = 0;
};

int cmd_hall(const HallArgs& args, const Common& common, std::ostream& out) {
  const Graph g = load_graph(args.graph);
  const int modes = args.edge + args.total + !args.check.empty();
  if (modes != 1) throw InputError("give exactly one of --edge, --total, --check");
  const HallGuards defaults;
  auto guard = [&](std::size_t d) { return args.guard ? args.guard : d; };
  Json j;
  if (args.edge) {
    j = hall_report_to_json(hall_condition_index(g, guard(defaults.edge_index), !args.all_subsets));
    if (args.via_lists) j["via_lists"] = hall_condition_index_via_lists(g, guard(defaults.edge_index_via_lists));
  } else if (args.total) {
    j = hall_report_to_json(
        total_hall_condition_number(g, guard(defaults.total_index), !args.all_subsets));
    if (args.via_lists) {
      j["via_lists"] = total_hall_condition_number_via_lists(g, guard(defaults.total_index_via_lists));
    }
  } else {
    ListsFile lists = load_lists(args.check);
    HallCheck c = lists.vertex_lists
                      ? check_hall_total_condition(
                            g, TotalListAssignment{lists.edge_lists, *lists.vertex_lists},
                            guard(defaults.total_check))
                      : check_hall_edge_condition(g, lists.edge_lists, guard(defaults.edge_check));
    j = hall_check_to_json(c);
  }
  emit(common.output, dump_json(j), out);
  return kExitOk;
}

// ---- fuzz ------------------------------------------------------------------

struct TrialOutcome {
  bool success = false;
  bool solve_failure = false;
  bool checker_failure = false;
  bool oracle_checked = false;
  bool oracle_disagreement = false;
  bool oracle_budget_exceeded = false;
  bool colourable_but_unsolved = false;
  std::optional<FuzzFailure> failure;
};

TrialOutcome run_trial(const FuzzConfig& config, std::size_t trial) {
  Rng graph_rng = substream(config.seed, "graph", trial);
  const std::size_t n = 1 + uniform_below(graph_rng, std::max<std::size_t>(config.n_max, 1));
  const double p = static_cast<double>(1 + uniform_below(graph_rng, 9)) / 10.0;
  const Graph g = random_graph(n, p, graph_rng());

  Rng list_rng = substream(config.seed, "lists", trial);
  const long k_signed = static_cast<long>(max_degree(g)) + config.offset;
  const std::size_t k = static_cast<std::size_t>(std::max(1L, k_signed));
  const std::size_t palette = k + uniform_below(list_rng, 2 * k + 1);
  const ListAssignment lists = random_lists(g, k, palette, list_rng());
  const bool consult_oracle =
      g.num_edges() <= config.oracle_max_edges && uniform_unit(list_rng) < config.oracle_rate;

  TrialOutcome o;
  SolverOptions options;
  options.force = config.offset < 2;
  options.inject_fault = config.inject_fault;
  bool solved = false;
  try {
    SolveResult result = colour_edges(g, lists, options);
    solved = true;
    if (auto bad = check_edge_colouring(g, lists, result.colouring)) {
      o.checker_failure = true;
      o.failure = FuzzFailure{trial, "checker", bad->message};
    } else {
      o.success = true;
    }
  } catch (const SolveFailure& f) {
    o.solve_failure = true;
    o.failure = FuzzFailure{trial, "solve", f.what()};
    if (config.offset >= 2 && !config.repro_dir.empty()) {
      std::filesystem::create_directories(config.repro_dir);
      write_file(config.repro_dir + "/trial-" + std::to_string(trial) + ".json",
                 dump_json(repro_bundle(g, lists, f)));
    }
  } catch (const InvariantError& e) {
    o.checker_failure = true;
    o.failure = FuzzFailure{trial, "invariant", e.what()};
  }

  if (consult_oracle) {
    OracleBudget budget;
    budget.node_limit = config.oracle_node_limit;
    const auto r = list_edge_colourable(g, lists, budget);
    o.oracle_checked = true;
    if (r.verdict == Verdict::budget_exceeded) {
      o.oracle_budget_exceeded = true;
    } else if (solved && r.verdict == Verdict::no) {
      o.oracle_disagreement = true;
      o.failure = FuzzFailure{trial, "oracle", "solver coloured an instance the oracle rejects"};
    } else if (!solved && r.verdict == Verdict::yes) {
      o.colourable_but_unsolved = true;
    }
  }
  return o;
}

struct FuzzArgs {
  FuzzConfig config;
};

int cmd_fuzz(const FuzzArgs& args, const Common& common, std::ostream& out) {
  FuzzConfig config = args.config;
  config.seed = common.seed;
  const FuzzSummary summary = run_fuzz(config);
  emit(common.output, dump_json(fuzz_summary_to_json(config, summary)), out);
  return summary.failed(config.offset) ? kExitFailure : kExitOk;
}

}  // namespace

bool FuzzSummary::failed(int offset) const {
  return (offset >= 2 && solve_failures > 0) || checker_failures > 0 || oracle_disagreements > 0;
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  std::vector<TrialOutcome> outcomes(config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) outcomes[t] = run_trial(config, t);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, config.trials));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  FuzzSummary s;
  s.trials = config.trials;
  for (const auto& o : outcomes) {
    s.successes += o.success;
    s.solve_failures += o.solve_failure;
    s.checker_failures += o.checker_failure;
    s.oracle_checked += o.oracle_checked;
    s.oracle_disagreements += o.oracle_disagreement;
    s.oracle_budget_exceeded += o.oracle_budget_exceeded;
    s.colourable_but_unsolved += o.colourable_but_unsolved;
    if (o.failure) s.failures.push_back(*o.failure);
  }
  return s;
}

Json fuzz_summary_to_json(const FuzzConfig& config, const FuzzSummary& s) {
  Json j;
  j["trials"] = s.trials;
  j["n_max"] = config.n_max;
  j["offset"] = config.offset;
  j["seed"] = config.seed;
  j["successes"] = s.successes;
  j["solve_failures"] = s.solve_failures;
  j["checker_failures"] = s.checker_failures;
  j["oracle_checked"] = s.oracle_checked;
  j["oracle_disagreements"] = s.oracle_disagreements;
  j["oracle_budget_exceeded"] = s.oracle_budget_exceeded;
  j["colourable_but_unsolved"] = s.colourable_but_unsolved;
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    failures.push_back(Json{{"trial", f.trial}, {"kind", f.kind}, {"detail", f.detail}});
  }
  j["failures"] = failures;
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List edge and total colouring toolkit", "lec"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", common.output, "Output file (default: standard output)");
    sub->add_option("--seed", common.seed, "Random seed")->default_val(0);
  };

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph and optionally random lists");
  gen_cmd->add_option("--kind", gen.kind, "path, cycle, complete, bipartite, petersen or random");
  gen_cmd->add_option("-n,--n", gen.n, "Vertex count");
  gen_cmd->add_option("--a", gen.a, "First side of a complete bipartite graph");
  gen_cmd->add_option("--b", gen.b, "Second side of a complete bipartite graph");
  gen_cmd->add_option("--p", gen.p, "Edge probability of a random graph");
  gen_cmd->add_option("--lists-out", gen.lists_out, "Also write random lists to this file");
  gen_cmd->add_option("--list-size", gen.list_size, "List size (default Δ+2, or Δ+4 with --total)");
  gen_cmd->add_option("--palette", gen.palette, "Palette size (default twice the list size)");
  gen_cmd->add_flag("--total", gen.total, "Generate total lists");
  add_common(gen_cmd);

  ColourArgs colour;
  auto* colour_cmd = app.add_subcommand("colour-edges", "List edge colouring");
  colour_cmd->add_option("graph", colour.graph, "Graph file")->required();
  colour_cmd->add_option("--lists", colour.lists, "Lists JSON file");
  colour_cmd->add_option("--uniform", colour.uniform, "Give every edge {0..k-1}");
  colour_cmd->add_option("--random", colour.random, "Random lists of this size");
  colour_cmd->add_option("--palette", colour.palette, "Palette for --random (default 2k)");
  colour_cmd->add_flag("--force", colour.force, "Waive the Δ+2 list size check");
  colour_cmd->add_option("--trace", colour.trace, "Write the CIP search trace here");
  colour_cmd->add_option("--dot", colour.dot, "Write applied interchange paths as DOT here");
  colour_cmd->add_option("--repro", colour.repro, "Reproduction bundle path on failure");
  colour_cmd->add_option("--node-limit", colour.node_limit, "CIP search node limit");
  add_common(colour_cmd);

  TotalArgs total;
  auto* total_cmd = app.add_subcommand("colour-total", "Total colouring");
  total_cmd->add_option("graph", total.graph, "Graph file")->required();
  total_cmd->add_option("--lists", total.lists, "Total lists JSON file");
  total_cmd->add_option("--palette", total.palette, "Palette size (at least Δ+4)");
  add_common(total_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a colouring");
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  verify_cmd->add_option("colouring", verify.colouring, "Colouring JSON file")->required();
  verify_cmd->add_option("--lists", verify.lists, "Lists JSON file");
  add_common(verify_cmd);

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact small-graph parameters");
  exact_cmd->add_option("graph", exact.graph, "Graph file")->required();
  exact_cmd->add_option("--lists", exact.lists, "Also decide colourability from these lists");
  exact_cmd->add_option("--node-limit", exact.node_limit, "Backtracking node limit");
  exact_cmd->add_option("--edge-guard", exact.edge_guard, "Largest edge count attempted");
  exact_cmd->add_option("--vertex-guard", exact.vertex_guard, "Largest vertex count for α_T");
  add_common(exact_cmd);

  HallArgs hall;
  auto* hall_cmd = app.add_subcommand("hall", "Hall condition numbers and checks");
  hall_cmd->add_option("graph", hall.graph, "Graph file")->required();
  hall_cmd->add_flag("--edge", hall.edge, "Report s′");
  hall_cmd->add_flag("--total", hall.total, "Report s_T");
  hall_cmd->add_option("--check", hall.check, "Check Hall's condition for these lists");
  hall_cmd->add_flag("--via-lists", hall.via_lists, "Also compute the uniform-list value");
  hall_cmd->add_flag("--all-subsets", hall.all_subsets, "Scan disconnected subsets too");
  hall_cmd->add_option("--guard", hall.guard, "Override the size guard (vertices for s′, edges for edge-condition checks, vertices plus edges in the total case)");
  add_common(hall_cmd);

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random solver campaign");
  fuzz_cmd->add_option("--trials", fuzz.config.trials, "Number of instances");
  fuzz_cmd->add_option("--n-max", fuzz.config.n_max, "Largest vertex count");
  fuzz_cmd->add_option("--offset", fuzz.config.offset, "List size minus Δ");
  fuzz_cmd->add_option("--jobs", fuzz.config.jobs, "Worker threads");
  fuzz_cmd->add_option("--oracle-rate", fuzz.config.oracle_rate, "Fraction checked by the oracle");
  fuzz_cmd->add_option("--oracle-max-edges", fuzz.config.oracle_max_edges,
                       "Largest instance given to the oracle");
  fuzz_cmd->add_option("--repro-dir", fuzz.config.repro_dir, "Directory for failure bundles");
  fuzz_cmd->add_flag("--inject-fault", fuzz.config.inject_fault, "Corrupt solver output (self-test)");
  add_common(fuzz_cmd);

  std::vector<std::string> argv_store{"lec"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, common, out);
    if (colour_cmd->parsed()) return cmd_colour_edges(colour, common, out, err);
    if (total_cmd->parsed()) return cmd_colour_total(total, common, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, common, out);
    if (exact_cmd->parsed()) return cmd_exact(exact, common, out);
    if (hall_cmd->parsed()) return cmd_hall(hall, common, out);
    if (fuzz_cmd->parsed()) return cmd_fuzz(fuzz, common, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace lec
