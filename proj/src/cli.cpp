#include "spreadlab/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/graph_io.hpp"
#include "spreadlab/multipartite.hpp"
#include "spreadlab/product_bounds.hpp"
#include "spreadlab/report.hpp"
#include "spreadlab/solver.hpp"

namespace spreadlab::cli {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFalsified = 3;

const char* command_name(Command c) {
  switch (c) {
    case Command::gen: return "gen";
    case Command::simulate: return "simulate";
    case Command::solve: return "solve";
    case Command::bound: return "bound";
    case Command::verify: return "verify";
  }
  return "unknown";
}

json source_json(const GraphSource& source) {
  if (source.family) return {{"family", *source.family}};
  if (source.file) return {{"file", *source.file}};
  return nullptr;
}

struct LoadedGraph {
  Graph graph;
  std::optional<MultipartiteSpec> multipartite;
};

LoadedGraph load(const GraphSource& source, const char* what) {
  if (source.family.has_value() == source.file.has_value()) {
    throw Error(ErrorCode::invalid_argument,
                std::string("exactly one graph source (family or file) is required for the ") + what);
  }
  if (source.file) return {parse_graph_file(*source.file), std::nullopt};
  FamilyGraph f = parse_family(*source.family);
  return {std::move(f.graph), std::move(f.multipartite)};
}

VertexSet to_set(const Graph& graph, const std::vector<Vertex>& ids, const char* what) {
  VertexSet set(graph.order());
  for (Vertex v : ids) {
    if (v >= graph.order()) {
      throw Error(ErrorCode::invalid_argument, std::string(what) + " contains vertex " + std::to_string(v) +
                                                   " but the graph has " + std::to_string(graph.order()) +
                                                   " vertices");
    }
    set.insert(v);
  }
  return set;
}

const Rule& require_rule(const RunConfig& config) {
  if (!config.rule) {
    throw Error(ErrorCode::invalid_argument, std::string("--rule is required for ") + command_name(config.command));
  }
  return *config.rule;
}

std::string set_text(const VertexSet& set) {
  std::string s = "{";
  bool first = true;
  set.for_each([&](Vertex v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

std::string pairs_text(const VertexSet& set, std::size_t right_order) {
  std::string s;
  set.for_each([&](Vertex id) {
    const auto pv = ProductVertex::unflatten(id, right_order);
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(pv.g) + "," + std::to_string(pv.h) + ")";
  });
  return s.empty() ? "(none)" : s;
}

SolveOptions solve_options(const RunConfig& config) {
  SolveOptions options;
  options.budget = config.budget;
  options.vertex_limit = config.solver_limit;
  options.workers = config.workers;
  return options;
}

// Each command fills `input` and `result` and may write text output.
struct Outcome {
  json input = json::object();
  json result;
  int status = kExitOk;
};

void do_gen(const RunConfig& config, std::ostream& out, Outcome& o) {
  o.input["graph"] = source_json(config.graph);
  const LoadedGraph g = load(config.graph, "graph");
  o.result = {{"graph", to_json(g.graph)}};
  if (config.format == OutputFormat::text) write_edge_list(out, g.graph);
}

void do_simulate(const RunConfig& config, std::ostream& out, Outcome& o) {
  o.input = {{"graph", source_json(config.graph)}, {"seed", config.seed}};
  const Rule& rule = require_rule(config);
  o.input["rule"] = rule.to_string();
  const LoadedGraph g = load(config.graph, "graph");
  const Trace trace = run(g.graph, rule, to_set(g.graph, config.seed, "seed set"));
  o.result = to_json(trace);
  if (config.format == OutputFormat::text) {
    out << "graph: n=" << g.graph.order() << " m=" << g.graph.size() << "\n";
    out << "rule: " << rule.to_string() << "\n";
    out << "seed: " << set_text(trace.seed) << "\n";
    for (std::size_t t = 0; t < trace.waves.size(); ++t) {
      out << "step " << t + 1 << ": " << set_text(trace.waves[t]) << "\n";
    }
    out << "converted: " << (trace.converted ? "yes" : "no") << " after " << trace.steps() << " steps\n";
  }
}

void do_solve(const RunConfig& config, std::ostream& out, Outcome& o) {
  o.input = {{"graph", source_json(config.graph)}};
  const Rule& rule = require_rule(config);
  o.input["rule"] = rule.to_string();
  o.input["budget"] = config.budget ? json(*config.budget) : json(nullptr);
  o.input["solver_limit"] = config.solver_limit;
  const LoadedGraph g = load(config.graph, "graph");
  const SolveOutcome outcome = min_conversion(g.graph, rule, solve_options(config));
  o.result = to_json(outcome);
  std::optional<MultipartiteAnswer> closed;
  if (g.multipartite) {
    closed = rule.is_majority() ? multipartite_dynamo(*g.multipartite)
                                : multipartite_min_k_witness(*g.multipartite, rule.k());
    o.result["closed_form"] = to_json(*closed);
  }
  if (config.format == OutputFormat::text) {
    if (const auto* r = std::get_if<SolveResult>(&outcome)) {
      out << "minimum size: " << r->size << "\nwitness: " << set_text(r->witness) << "\nexplored: " << r->explored
          << "\n";
    } else {
      const auto& none = std::get<NoSetWithinBudget>(outcome);
      out << "no converting set within budget " << none.budget << " (explored " << none.explored << ")\n";
    }
    if (closed) out << "closed form: " << closed->value << " witness " << set_text(closed->witness) << "\n";
  }
  if (std::holds_alternative<NoSetWithinBudget>(outcome)) o.status = kExitRejected;
}

void do_bound(const RunConfig& config, std::ostream& out, Outcome& o) {
  const Rule& rule = require_rule(config);
  const bool cartesian = config.product == ProductKind::cartesian;
  o.input = {{"product", cartesian ? "cartesian" : "tensor"},
             {"left", source_json(config.left)},
             {"right", source_json(config.right)},
             {"rule", rule.to_string()},
             {"theorem", config.theorem ? json(*config.theorem) : json(nullptr)}};
  if (config.left_set) o.input["left_set"] = *config.left_set;
  if (config.right_set) o.input["right_set"] = *config.right_set;

  std::vector<int> constructions;
  if (config.theorem) {
    constructions.push_back(*config.theorem);
  } else if (cartesian) {
    constructions = rule.is_majority() ? std::vector<int>{4, 5} : std::vector<int>{3};
  } else {
    constructions.push_back(rule.is_majority() ? 7 : 6);
  }
  for (int c : constructions) {
    const bool valid = cartesian ? (c == 3 && !rule.is_majority()) || ((c == 4 || c == 5) && rule.is_majority())
                                 : (c == 6 && !rule.is_majority()) || (c == 7 && rule.is_majority());
    if (!valid) {
      throw Error(ErrorCode::invalid_argument, "construction " + std::to_string(c) + " does not apply to a " +
                                                   (cartesian ? "cartesian" : "tensor") + " product under " +
                                                   rule.to_string());
    }
  }

  const Graph left = load(config.left, "left factor").graph;
  const Graph right = load(config.right, "right factor").graph;
  SolveOptions solver = solve_options(config);
  solver.budget.reset();
  auto factor_set = [&](const Graph& g, const std::optional<std::vector<Vertex>>& given, const char* what) {
    return given ? to_set(g, *given, what) : minimum_conversion_set(g, rule, solver).witness;
  };

  json reports = json::array();
  for (int c : constructions) {
    BoundReport report;
    if (cartesian) {
      const VertexSet ls = factor_set(left, config.left_set, "left set");
      const VertexSet rs = factor_set(right, config.right_set, "right set");
      if (c == 3) report = cartesian_k_witness(left, ls, right, rs, rule.k());
      if (c == 4) report = cartesian_dynamo_witness(left, ls, right, rs);
      if (c == 5) {
        // Only attempted implicitly when its preconditions can hold.
        if (!config.theorem && (!analyze(left).isolated.empty() || !analyze(right).isolated.empty())) continue;
        report = cartesian_dynamo_witness_reduced(left, ls, right, rs);
      }
    } else if (config.left_set || config.right_set) {
      const VertexSet ls = factor_set(left, config.left_set, "left set");
      const VertexSet rs = factor_set(right, config.right_set, "right set");
      report = rule.is_majority() ? tensor_dynamo_witness(left, ls, right, rs)
                                  : tensor_k_witness(left, ls, right, rs, rule.k());
    } else {
      report = tensor_general(left, right, rule, [&](const Graph& g, const Rule& r) {
        return minimum_conversion_set(g, r, solver).witness;
      });
    }
    json j = to_json(report, right.order());
    j["theorem"] = c;
    reports.push_back(std::move(j));
    if (config.format == OutputFormat::text) {
      out << construction_name(report.construction) << ": bound " << report.bound << ", "
          << (report.verified ? "verified" : "NOT verified") << " in " << report.steps << " steps\n";
      out << "  witness: " << pairs_text(report.witness, right.order()) << "\n";
    }
  }
  o.result = {{"product_order", left.order() * right.order()}, {"reports", std::move(reports)}};
}

void do_verify(const RunConfig& config, std::ostream& out, Outcome& o) {
  static constexpr const char* names[] = {"multipartite", "cartesian", "tensor", "lemmas", "engine", "spot", "all"};
  VerifyOptions options = config.verify;
  options.workers = config.workers;
  options.solver_limit = config.solver_limit;
  options.rng_seed = config.rng_seed;
  o.input = {{"scope", names[static_cast<int>(config.scope)]},
             {"max_n", options.max_n ? json(*options.max_n) : json(nullptr)},
             {"max_product", options.max_product},
             {"trials", options.trials},
             {"rng_seed", options.rng_seed}};
  const auto sections = verify_suite(config.scope, options);
  o.result = suite_json(config.scope, sections);
  bool ok = true;
  for (const auto& s : sections) ok = ok && s.ok();
  if (config.format == OutputFormat::text) {
    for (const auto& s : sections) {
      out << s.name << ": " << s.passed() << "/" << s.checks.size() << " passed";
      if (const auto* f = s.first_failure()) out << ", first counterexample " << f->key << " " << f->detail.dump();
      out << "\n";
    }
  }
  o.status = ok ? kExitOk : kExitFalsified;
}

}  // namespace

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  auto number = [&](const std::string& token) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (token.empty() || pos != token.size() || token[0] == '-' || token[0] == '+' || value > 0xffffffffUL) {
      throw Error(ErrorCode::invalid_argument, "bad vertex id '" + token + "' in list '" + text + "'");
    }
    return static_cast<Vertex>(value);
  };
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const Vertex a = number(item.substr(0, dash));
    const Vertex b = number(item.substr(dash + 1));
    if (a > b) throw Error(ErrorCode::invalid_argument, "empty range '" + item + "'");
    for (Vertex v = a; v <= b; ++v) out.push_back(v);
  }
  if (text.back() == ',') throw Error(ErrorCode::invalid_argument, "trailing comma in '" + text + "'");
  return out;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  json error = nullptr;
  int status = kExitOk;
  try {
    switch (config.command) {
      case Command::gen: do_gen(config, out, outcome); break;
      case Command::simulate: do_simulate(config, out, outcome); break;
      case Command::solve: do_solve(config, out, outcome); break;
      case Command::bound: do_bound(config, out, outcome); break;
      case Command::verify: do_verify(config, out, outcome); break;
    }
    status = outcome.status;
  } catch (const Error& e) {
    error = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    status = e.code() == ErrorCode::verification_failed ? kExitFalsified : kExitRejected;
    if (config.format == OutputFormat::text) err << "error: " << e.what() << "\n";
  }
  if (config.format == OutputFormat::json) {
    json report = {{"command", command_name(config.command)},
                   {"input", outcome.input},
                   {"result", outcome.result},
                   {"timing", nullptr}};
    if (!error.is_null()) report["error"] = error;
    if (config.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["timing"] = {{"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
    }
    out << report.dump(2) << "\n";
  }
  return status;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreversible threshold and majority conversion processes on graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format;
  std::string rule_text;
  std::string seed_text;
  std::string left_set_text;
  std::string right_set_text;
  std::string scope_text = "all";
  std::optional<std::size_t> solver_limit;
  GraphSource graph;

  app.add_option("--format", format, "Output format: json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", config.timing, "Include wall-clock timing in JSON output");
  app.add_option("--solver-limit", solver_limit, "Largest graph order the exact solver accepts")
      ->check(CLI::Range(std::size_t{1}, kMaxSolverLimit));
  app.add_option("--workers", config.workers, "Worker threads (never changes results)")->check(CLI::PositiveNumber);

  auto add_graph_source = [&](CLI::App* sub) {
    auto* fam = sub->add_option("--family", graph.family, "Named graph, e.g. cycle:4 or multipartite:3,2,1");
    auto* file = sub->add_option("--graph", graph.file, "Edge-list file");
    fam->excludes(file);
  };
  auto add_rule = [&](CLI::App* sub) { sub->add_option("--rule", rule_text, "majority or k:<k>"); };

  auto* gen = app.add_subcommand("gen", "Write a graph as an edge list");
  add_graph_source(gen);

  auto* simulate = app.add_subcommand("simulate", "Run the conversion process from a seed set");
  add_graph_source(simulate);
  add_rule(simulate);
  simulate->add_option("--seed", seed_text, "Seed vertices, e.g. 0,2,4-6");

  auto* solve = app.add_subcommand("solve", "Exact minimum conversion set");
  add_graph_source(solve);
  add_rule(solve);
  solve->add_option("--budget", config.budget, "Largest cardinality to try");

  auto* bound = app.add_subcommand("bound", "Product-graph upper-bound constructions");
  bool cartesian = false, tensor = false;
  auto* cart_flag = bound->add_flag("--cartesian", cartesian, "Cartesian product");
  auto* tensor_flag = bound->add_flag("--tensor", tensor, "Tensor product");
  cart_flag->excludes(tensor_flag);
  bound->add_option("--left", config.left.family, "Left factor family");
  bound->add_option("--right", config.right.family, "Right factor family");
  bound->add_option("--left-graph", config.left.file, "Left factor edge-list file");
  bound->add_option("--right-graph", config.right.file, "Right factor edge-list file");
  bound->add_option("--left-set", left_set_text, "Left factor converting set (default: exact minimum)");
  bound->add_option("--right-set", right_set_text, "Right factor converting set (default: exact minimum)");
  bound->add_option("--theorem", config.theorem, "Construction: 3 cartesian k-threshold, 4 cartesian dynamo, "
                                                 "5 reduced cartesian dynamo, 6 tensor k-threshold, 7 tensor dynamo")
      ->check(CLI::Range(3, 7));
  add_rule(bound);

  auto* verify = app.add_subcommand("verify", "Sweep every construction against the exact solver");
  verify->add_option("--scope", scope_text, "multipartite, cartesian, tensor, lemmas, engine, spot or all")
      ->check(CLI::IsMember({"multipartite", "cartesian", "tensor", "lemmas", "engine", "spot", "all"}));
  verify->add_option("--max-n", config.verify.max_n, "Vertex cap for generated graphs");
  verify->add_option("--max-product", config.verify.max_product, "Largest product order in the catalogue sweep");
  verify->add_option("--trials", config.verify.trials, "Random graphs for the lemma sweep");
  verify->add_option("--rng-seed", config.rng_seed, "Seed for all random generation");

  std::vector<std::string> argv_storage{"spreadlab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) config.command = Command::gen;
    if (*simulate) config.command = Command::simulate;
    if (*solve) config.command = Command::solve;
    if (*bound) config.command = Command::bound;
    if (*verify) config.command = Command::verify;
    config.graph = graph;
    if (format.empty()) {
      config.format = config.command == Command::gen ? OutputFormat::text : OutputFormat::json;
    } else {
      config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    }
    config.solver_limit = solver_limit ? *solver_limit : solver_limit_from_environment();
    if (!rule_text.empty()) config.rule = Rule::parse(rule_text);
    config.seed = parse_vertex_list(seed_text);
    if (!left_set_text.empty()) config.left_set = parse_vertex_list(left_set_text);
    if (!right_set_text.empty()) config.right_set = parse_vertex_list(right_set_text);
    config.scope = parse_verify_scope(scope_text);
    if (*bound && cartesian == tensor) {
      throw Error(ErrorCode::invalid_argument, "bound needs exactly one of --cartesian and --tensor");
    }
    config.product = tensor ? ProductKind::tensor : ProductKind::cartesian;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return dispatch(config, out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

}  // namespace spreadlab::cli
