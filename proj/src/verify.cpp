#include "spreadlab/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "parallel.hpp"
#include "spreadlab/conversion.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/graph_io.hpp"
#include "spreadlab/multipartite.hpp"
#include "spreadlab/product_bounds.hpp"
#include "spreadlab/report.hpp"

namespace spreadlab {

using nlohmann::json;

namespace {

struct Case {
  std::string key;
  /// Fills the detail object; returns the pass flag.
  std::function<bool(json&)> body;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

std::string padded(std::size_t i, int width = 4) {
  std::string s = std::to_string(i);
  return std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 0, '0') + s;
}

std::vector<CheckOutcome> run_cases(std::vector<Case> cases, std::size_t workers) {
  std::vector<CheckOutcome> out(cases.size());
  detail::parallel_for(cases.size(), workers, [&](std::size_t i) {
    CheckOutcome& check = out[i];
    check.key = cases[i].key;
    check.detail = json::object();
    try {
      check.pass = cases[i].body(check.detail);
    } catch (const Error& e) {
      check.pass = false;
      check.detail["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail["error"] = {{"code", "internal"}, {"message", e.what()}};
    }
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

SectionReport section(std::string name, std::vector<Case> cases, const VerifyOptions& options) {
  return {std::move(name), run_cases(std::move(cases), options.workers)};
}

SolveOptions solver_options(const VerifyOptions& options) {
  SolveOptions s;
  s.vertex_limit = options.solver_limit;
  return s;
}

std::size_t exact(const Graph& graph, const Rule& rule, const VerifyOptions& options) {
  return minimum_conversion_set(graph, rule, solver_options(options)).size;
}

// Partitions of n into at least two parts, each sorted non-increasing.
void partitions(std::size_t remaining, std::size_t largest, std::vector<std::size_t>& prefix,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (std::size_t p = std::min(remaining, largest); p >= 1; --p) {
    prefix.push_back(p);
    partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::vector<MultipartiteSpec> multipartite_specs(std::size_t max_n) {
  std::vector<MultipartiteSpec> specs;
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> prefix;
    partitions(n, n, prefix, parts);
    for (auto& p : parts) specs.emplace_back(std::move(p));
  }
  return specs;
}

std::string spec_label(const MultipartiteSpec& spec) {
  std::string s = "multipartite:";
  for (std::size_t i = 0; i < spec.part_count(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(spec.part(i));
  }
  return s;
}

std::vector<NamedGraph> factor_catalog() {
  std::vector<NamedGraph> out;
  for (const char* name : {"path:2", "path:3", "path:4", "path:5", "cycle:3", "cycle:4", "cycle:5", "cycle:6",
                           "complete:3", "complete:4", "multipartite:2,2", "star:4"}) {
    out.push_back({name, parse_family(name).graph});
  }
  return out;
}

std::string pair_label(const NamedGraph& g, const NamedGraph& h) { return g.name + "*" + h.name; }

// Shared tail of every product check: bound formula, witness verification
// and, for small products, the exact optimum.
bool check_product_bound(json& detail, const BoundReport& report, std::size_t formula, const Graph& product,
                         const Rule& rule, const VerifyOptions& options) {
  detail["bound"] = report.bound;
  detail["formula"] = formula;
  detail["witness"] = to_json(report.witness);
  detail["verified"] = report.verified;
  detail["steps"] = report.steps;
  bool pass = report.verified && report.bound == formula && report.witness.count() == formula &&
              is_conversion_set(product, rule, report.witness).converts;
  if (product.order() <= options.exact_product_cap) {
    const std::size_t optimum = exact(product, rule, options);
    detail["exact"] = optimum;
    pass = pass && optimum <= report.bound;
  }
  return pass;
}

}  // namespace

VerifyScope parse_verify_scope(const std::string& name) {
  if (name == "multipartite") return VerifyScope::multipartite;
  if (name == "cartesian") return VerifyScope::cartesian;
  if (name == "tensor") return VerifyScope::tensor;
  if (name == "lemmas") return VerifyScope::lemmas;
  if (name == "engine") return VerifyScope::engine;
  if (name == "spot") return VerifyScope::spot;
  if (name == "all") return VerifyScope::all;
  throw Error(ErrorCode::invalid_argument, "unknown verify scope '" + name + "'");
}

std::size_t SectionReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.pass; }));
}

std::size_t SectionReport::failed() const { return checks.size() - passed(); }

const CheckOutcome* SectionReport::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(), [](auto& c) { return !c.pass; });
  return it == checks.end() ? nullptr : &*it;
}

json SectionReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) list.push_back({{"key", c.key}, {"pass", c.pass}, {"detail", c.detail}});
  const CheckOutcome* failure = first_failure();
  return {{"name", name},
          {"passed", passed()},
          {"failed", failed()},
          {"first_counterexample", failure ? json(failure->key) : json(nullptr)},
          {"checks", std::move(list)}};
}

SectionReport verify_multipartite_min_k(const VerifyOptions& options) {
  std::vector<Case> cases;
  for (const auto& spec : multipartite_specs(options.max_n.value_or(8))) {
    const std::string label = spec_label(spec);
    const std::size_t n = spec.order();
    for (std::size_t k = 1; k <= n + 2; ++k) {
      cases.push_back({label + "/k=" + padded(k, 2), [spec, k, &options](json& d) {
                         const Graph g = complete_multipartite_graph(spec);
                         const Rule rule = Rule::k_threshold(k);
                         const std::size_t formula = multipartite_min_k(spec, k);
                         const std::size_t optimum = exact(g, rule, options);
                         const MultipartiteAnswer answer = multipartite_min_k_witness(spec, k);
                         const ConversionCheck check = is_conversion_set(g, rule, answer.witness);
                         d = {{"formula", formula},
                              {"exact", optimum},
                              {"witness", to_json(answer.witness)},
                              {"converts", check.converts},
                              {"steps", check.steps},
                              {"predicted_steps", answer.predicted_steps}};
                         return formula == optimum && answer.value == formula &&
                                answer.witness.count() == formula && check.converts &&
                                check.steps <= answer.predicted_steps && answer.predicted_steps <= 2;
                       }});
    }
    cases.push_back({label + "/monotone-in-k", [spec](json& d) {
                       json values = json::array();
                       bool pass = true;
                       std::size_t previous = 0;
                       for (std::size_t k = 1; k <= spec.order() + 2; ++k) {
                         const std::size_t v = multipartite_min_k(spec, k);
                         pass = pass && v >= previous;
                         previous = v;
                         values.push_back(v);
                       }
                       d["values"] = std::move(values);
                       return pass;
                     }});
  }
  return section("multipartite-min-k", std::move(cases), options);
}

SectionReport verify_multipartite_dynamo(const VerifyOptions& options) {
  std::vector<Case> cases;
  for (const auto& spec : multipartite_specs(options.max_n.value_or(9))) {
    cases.push_back({spec_label(spec), [spec, &options](json& d) {
                       const Graph g = complete_multipartite_graph(spec);
                       const Rule rule = Rule::majority();
                       const MultipartiteAnswer answer = multipartite_dynamo(spec);
                       const std::size_t optimum = exact(g, rule, options);
                       const ConversionCheck check = is_conversion_set(g, rule, answer.witness);
                       d = {{"formula", answer.value},
                            {"exact", optimum},
                            {"witness", to_json(answer.witness)},
                            {"converts", check.converts},
                            {"steps", check.steps}};
                       return answer.value == optimum && answer.witness.count() == answer.value &&
                              check.converts && check.steps <= answer.predicted_steps &&
                              answer.predicted_steps <= 2;
                     }});
  }
  return section("multipartite-dynamo", std::move(cases), options);
}

SectionReport verify_cartesian(const VerifyOptions& options) {
  std::vector<Case> cases;
  const auto catalog = factor_catalog();
  for (const auto& g : catalog) {
    for (const auto& h : catalog) {
      if (g.graph.order() * h.graph.order() > options.max_product) continue;
      const std::string label = pair_label(g, h);
      for (std::size_t k = 1; k <= 3; ++k) {
        cases.push_back({"cartesian-k-threshold/" + label + "/k=" + std::to_string(k), [g, h, k, &options](json& d) {
                           const Rule rule = Rule::k_threshold(k);
                           const auto sg = minimum_conversion_set(g.graph, rule, solver_options(options));
                           const auto sh = minimum_conversion_set(h.graph, rule, solver_options(options));
                           const BoundReport r = cartesian_k_witness(g.graph, sg.witness, h.graph, sh.witness, k);
                           return check_product_bound(d, r, sg.size * sh.size, cartesian_product(g.graph, h.graph),
                                                      rule, options);
                         }});
      }
      cases.push_back({"cartesian-dynamo/" + label, [g, h, &options](json& d) {
                         const Rule rule = Rule::majority();
                         const auto dg = minimum_conversion_set(g.graph, rule, solver_options(options));
                         const auto dh = minimum_conversion_set(h.graph, rule, solver_options(options));
                         const BoundReport r = cartesian_dynamo_witness(g.graph, dg.witness, h.graph, dh.witness);
                         const std::size_t formula =
                             dg.size * h.graph.order() + dh.size * g.graph.order() - dg.size * dh.size;
                         return check_product_bound(d, r, formula, cartesian_product(g.graph, h.graph), rule,
                                                    options);
                       }});
      cases.push_back({"cartesian-dynamo-reduced/" + label, [g, h, &options](json& d) {
                         const Rule rule = Rule::majority();
                         const auto dg = minimum_conversion_set(g.graph, rule, solver_options(options));
                         const auto dh = minimum_conversion_set(h.graph, rule, solver_options(options));
                         const BoundReport r =
                             cartesian_dynamo_witness_reduced(g.graph, dg.witness, h.graph, dh.witness);
                         const std::size_t formula =
                             dg.size * h.graph.order() + dh.size * g.graph.order() - 2 * dg.size * dh.size;
                         const bool pass = check_product_bound(d, r, formula, cartesian_product(g.graph, h.graph),
                                                               rule, options);
                         return pass && !r.witness.empty();
                       }});
    }
  }
  // Edgeless factors: the cross-union bound is exact.
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      cases.push_back({"cartesian-dynamo-edgeless/empty:" + std::to_string(a) + "*empty:" + std::to_string(b),
                       [a, b, &options](json& d) {
                         const Graph g = empty_graph(a);
                         const Graph h = empty_graph(b);
                         const Rule rule = Rule::majority();
                         const auto dg = minimum_conversion_set(g, rule, solver_options(options));
                         const auto dh = minimum_conversion_set(h, rule, solver_options(options));
                         const BoundReport r = cartesian_dynamo_witness(g, dg.witness, h, dh.witness);
                         const std::size_t optimum = exact(cartesian_product(g, h), rule, options);
                         d = {{"bound", r.bound}, {"exact", optimum}};
                         return r.bound == optimum && optimum == a * b;
                       }});
    }
  }
  return section("cartesian", std::move(cases), options);
}

SectionReport verify_tensor(const VerifyOptions& options) {
  std::vector<Case> cases;
  const auto catalog = factor_catalog();
  for (const auto& g : catalog) {
    for (const auto& h : catalog) {
      if (g.graph.order() * h.graph.order() > options.max_product) continue;
      const std::string label = pair_label(g, h);
      for (std::size_t k = 1; k <= 3; ++k) {
        cases.push_back({"tensor-k-threshold/" + label + "/k=" + std::to_string(k), [g, h, k, &options](json& d) {
                           const Rule rule = Rule::k_threshold(k);
                           const auto sg = minimum_conversion_set(g.graph, rule, solver_options(options));
                           const auto sh = minimum_conversion_set(h.graph, rule, solver_options(options));
                           const BoundReport r = tensor_k_witness(g.graph, sg.witness, h.graph, sh.witness, k);
                           const std::size_t formula =
                               std::min(sg.size * h.graph.order(), sh.size * g.graph.order());
                           return check_product_bound(d, r, formula, tensor_product(g.graph, h.graph), rule,
                                                      options);
                         }});
      }
      cases.push_back({"tensor-dynamo/" + label, [g, h, &options](json& d) {
                         const Rule rule = Rule::majority();
                         const auto dg = minimum_conversion_set(g.graph, rule, solver_options(options));
                         const auto dh = minimum_conversion_set(h.graph, rule, solver_options(options));
                         const BoundReport r = tensor_dynamo_witness(g.graph, dg.witness, h.graph, dh.witness);
                         const std::size_t formula = std::min(dg.size * h.graph.order(), dh.size * g.graph.order());
                         return check_product_bound(d, r, formula, tensor_product(g.graph, h.graph), rule, options);
                       }});
    }
  }
  // Factors with isolated vertices go through the core-plus-isolated bound.
  const std::vector<NamedGraph> padded_factors = {
      {"path:2+isolated:1", make_graph(3, {{0, 1}})},
      {"path:3+isolated:2", make_graph(5, {{0, 1}, {1, 2}})},
      {"empty:2", empty_graph(2)},
      {"path:2", path_graph(2)},
      {"cycle:4", cycle_graph(4)},
  };
  for (const auto& g : padded_factors) {
    for (const auto& h : padded_factors) {
      for (const Rule& rule : {Rule::majority(), Rule::k_threshold(1), Rule::k_threshold(2)}) {
        cases.push_back({"tensor-general/" + pair_label(g, h) + "/" + rule.to_string(),
                         [g, h, rule, &options](json& d) {
                           const BoundReport r = tensor_general(g.graph, h.graph, rule);
                           const Graph product = tensor_product(g.graph, h.graph);
                           const VertexSet gc = analyze(g.graph).isolated.complement();
                           const VertexSet hc = analyze(h.graph).isolated.complement();
                           std::size_t core = 0;
                           if (!gc.empty() && !hc.empty()) {
                             const std::size_t sg = exact(g.graph.induced(gc), rule, options);
                             const std::size_t sh = exact(h.graph.induced(hc), rule, options);
                             core = std::min(sg * hc.count(), sh * gc.count());
                           }
                           const std::size_t isolated = analyze(product).isolated.count();
                           d["isolated"] = r.isolated;
                           d["expected_isolated"] = isolated;
                           const bool pass = check_product_bound(d, r, core + isolated, product, rule, options);
                           return pass && r.isolated == isolated && tensor_isolated_count(g.graph, h.graph) == isolated;
                         }});
      }
    }
  }
  return section("tensor", std::move(cases), options);
}

SectionReport verify_double_cover(const VerifyOptions& options) {
  std::vector<NamedGraph> family;
  for (const char* name : {"path:2", "path:3", "path:4", "path:5", "path:6", "cycle:4", "cycle:6", "star:3", "star:4",
                           "star:5"}) {
    family.push_back({name, parse_family(name).graph});
  }
  std::mt19937_64 rng(options.rng_seed);
  const std::size_t span = options.max_tree_n >= 2 ? options.max_tree_n - 1 : 1;
  for (std::size_t i = 0; i < options.random_trees; ++i) {
    const std::size_t n = 2 + rng() % span;
    const std::uint64_t seed = rng();
    const std::string name = "tree:" + std::to_string(n) + "," + std::to_string(seed);
    family.push_back({"tree#" + padded(i, 2) + "/" + name, random_tree(n, seed)});
  }

  const Graph k2 = complete_graph(2);
  std::vector<Case> cases;
  for (const auto& g : family) {
    cases.push_back({"double-cover-structure/" + g.name, [g, k2](json& d) {
                       const StructureReport base = analyze(g.graph);
                       const Graph cover = tensor_product(g.graph, k2);
                       const StructureReport s = analyze(cover);
                       d["components"] = s.components.size();
                       bool pass = base.bipartite && base.components.size() == 1 && s.components.size() == 2;
                       auto sorted_degrees = [](std::vector<std::size_t> v) {
                         std::sort(v.begin(), v.end());
                         return v;
                       };
                       for (const auto& comp : s.components) {
                         VertexSet members(cover.order(), std::span<const Vertex>(comp));
                         const Graph part = cover.induced(members);
                         pass = pass && part.order() == g.graph.order() && part.size() == g.graph.size() &&
                                sorted_degrees(part.degrees()) == sorted_degrees(g.graph.degrees());
                       }
                       return pass;
                     }});
    for (const Rule& rule : {Rule::k_threshold(1), Rule::k_threshold(2), Rule::k_threshold(3), Rule::majority()}) {
      cases.push_back({"double-cover-tightness/" + g.name + "/" + rule.to_string(), [g, k2, rule, &options](json& d) {
                         const auto base = minimum_conversion_set(g.graph, rule, solver_options(options));
                         const auto edge = minimum_conversion_set(k2, rule, solver_options(options));
                         const Graph cover = tensor_product(g.graph, k2);
                         const std::size_t optimum = exact(cover, rule, options);
                         const BoundReport r =
                             rule.is_majority() ? tensor_dynamo_witness(g.graph, base.witness, k2, edge.witness)
                                                : tensor_k_witness(g.graph, base.witness, k2, edge.witness, rule.k());
                         d = {{"factor", base.size}, {"exact", optimum}, {"bound", r.bound}};
                         return optimum == 2 * base.size && r.bound == optimum;
                       }});
    }
  }
  return section("double-cover", std::move(cases), options);
}

SectionReport verify_lemmas(const VerifyOptions& options) {
  const std::size_t max_n = std::max<std::size_t>(options.max_n.value_or(12), 2);
  std::mt19937_64 rng(options.rng_seed);
  std::vector<Case> cases;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::size_t n = 2 + rng() % (max_n - 1);
    Graph g;
    std::uint64_t seed = 0;
    std::size_t rejected = 0;
    // Rejection sampling: redraw until no vertex is isolated.
    while (true) {
      seed = rng();
      g = gnp_graph(n, {1, 2}, seed);
      if (analyze(g).isolated.empty()) break;
      ++rejected;
    }
    const std::string key = "trial=" + padded(trial) + "/gnp:" + std::to_string(n) + ",1/2," + std::to_string(seed);
    cases.push_back({key, [g, rejected, &options](json& d) {
                       const Rule rule = Rule::majority();
                       const VertexSet minimal = shrink_to_minimal(g, rule, g.vertices());
                       const bool is_min = is_minimal(g, rule, minimal);
                       const ConversionCheck rest = is_conversion_set(g, rule, minimal.complement());
                       const auto optimum = minimum_conversion_set(g, rule, solver_options(options));
                       const ConversionCheck rest_of_minimum =
                           is_conversion_set(g, rule, optimum.witness.complement());
                       d = {{"rejected_draws", rejected},
                            {"minimal_dynamo", to_json(minimal)},
                            {"is_minimal", is_min},
                            {"complement_converts", rest.converts},
                            {"complement_steps", rest.steps},
                            {"min_dynamo", optimum.size},
                            {"order", g.order()}};
                       return is_min && rest.converts && rest.steps <= 1 && rest_of_minimum.converts &&
                              rest_of_minimum.steps <= 1 && 2 * optimum.size <= g.order();
                     }});
  }
  return section("lemmas", std::move(cases), options);
}

SectionReport verify_engine(const VerifyOptions& options) {
  std::mt19937_64 rng(options.rng_seed);
  std::vector<Case> cases;
  for (std::size_t trial = 0; trial < options.engine_trials; ++trial) {
    const std::size_t n = rng() % 13;
    const std::uint64_t graph_seed = rng();
    const std::uint64_t numerator = 1 + rng() % 3;
    const Graph g = gnp_graph(n, {numerator, 4}, graph_seed);
    const std::uint64_t pick = rng() % 5;
    const Rule rule = pick == 0 ? Rule::majority() : Rule::k_threshold(pick);
    VertexSet seed(n);
    VertexSet extra(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto draw = rng() % 6;
      if (draw < 2) seed.insert(v);
      else if (draw < 4) extra.insert(v);
    }
    // Every fourth trial also checks a regular graph.
    std::optional<Graph> regular;
    if (trial % 4 == 0) {
      const std::size_t m = 3 + rng() % 6;
      switch (rng() % 3) {
        case 0: regular = cycle_graph(m); break;
        case 1: regular = complete_graph(m); break;
        default: regular = cartesian_product(cycle_graph(m), complete_graph(2)); break;
      }
    }
    const std::uint64_t regular_seed = rng();
    const std::string key = "trial=" + padded(trial) + "/gnp:" + std::to_string(n) + "," + std::to_string(numerator) +
                            "/4," + std::to_string(graph_seed) + "/" + rule.to_string();
    cases.push_back({key, [g, rule, seed, extra, regular, regular_seed](json& d) {
                       const Trace trace = run(g, rule, seed);
                       std::vector<std::string> failures;

                       // Waves are non-empty, disjoint from each other and from the seed, and
                       // replay step() exactly.
                       VertexSet black = seed;
                       for (const auto& wave : trace.waves) {
                         if (wave.empty() || wave.intersects(black)) failures.push_back("wave overlap");
                         const VertexSet next = step(g, rule, black);
                         if (!black.is_subset_of(next)) failures.push_back("step not monotone");
                         if (next != (black | wave)) failures.push_back("wave differs from step");
                         black = next;
                       }
                       if (step(g, rule, black) != black) failures.push_back("no fixpoint");
                       if (trace.steps() > g.order()) failures.push_back("more steps than vertices");
                       if (trace.converted != black.is_full()) failures.push_back("converted flag");

                       const ConversionTimes times = conversion_times(g, rule, seed);
                       for (Vertex v = 0; v < g.order(); ++v) {
                         std::optional<std::size_t> expected;
                         if (seed.contains(v)) expected = 0;
                         for (std::size_t t = 0; t < trace.waves.size(); ++t) {
                           if (trace.waves[t].contains(v)) expected = t + 1;
                         }
                         if (times[v] != expected) failures.push_back("times mismatch");
                       }

                       const VertexSet bigger = seed | extra;
                       const ConversionCheck small = is_conversion_set(g, rule, seed);
                       const ConversionCheck big = is_conversion_set(g, rule, bigger);
                       if (small.converts && (!big.converts || big.steps > small.steps)) {
                         failures.push_back("superset closure");
                       }

                       if (regular) {
                         const std::size_t degree = regular->degree(0);
                         std::mt19937_64 local(regular_seed);
                         VertexSet start(regular->order());
                         for (Vertex v = 0; v < regular->order(); ++v) {
                           if (local() % 3 == 0) start.insert(v);
                         }
                         const Trace a = run(*regular, Rule::majority(), start);
                         const Trace b = run(*regular, Rule::k_threshold((degree + 1) / 2), start);
                         if (a.waves != b.waves || a.converted != b.converted) failures.push_back("rule equivalence");
                         d["regular_order"] = regular->order();
                       }
                       d["steps"] = trace.steps();
                       d["converted"] = trace.converted;
                       d["failures"] = failures;
                       return failures.empty();
                     }});
  }
  return section("engine", std::move(cases), options);
}

SectionReport verify_spot_values(const VerifyOptions& options) {
  struct Spot {
    const char* key;
    const char* family;
    Rule rule;
    std::size_t expected;
  };
  const std::vector<Spot> spots = {
      {"cycle:4/majority", "cycle:4", Rule::majority(), 1},
      {"path:4/k:2", "path:4", Rule::k_threshold(2), 3},
      {"complete:5/majority", "complete:5", Rule::majority(), 2},
      {"multipartite:3,2,1/k:4", "multipartite:3,2,1", Rule::k_threshold(4), 4},
      {"multipartite:3,2,1/majority", "multipartite:3,2,1", Rule::majority(), 2},
  };
  std::vector<Case> cases;
  for (const auto& spot : spots) {
    cases.push_back({spot.key, [spot, &options](json& d) {
                       const auto result =
                           minimum_conversion_set(parse_family(spot.family).graph, spot.rule, solver_options(options));
                       d = {{"expected", spot.expected}, {"exact", result.size}, {"witness", to_json(result.witness)}};
                       return result.size == spot.expected;
                     }});
  }
  return section("spot-values", std::move(cases), options);
}

std::vector<SectionReport> verify_suite(VerifyScope scope, const VerifyOptions& options) {
  std::vector<SectionReport> out;
  auto want = [scope](VerifyScope s) { return scope == VerifyScope::all || scope == s; };
  if (want(VerifyScope::multipartite)) {
    out.push_back(verify_multipartite_min_k(options));
    out.push_back(verify_multipartite_dynamo(options));
  }
  if (want(VerifyScope::cartesian)) out.push_back(verify_cartesian(options));
  if (want(VerifyScope::tensor)) {
    out.push_back(verify_tensor(options));
    out.push_back(verify_double_cover(options));
  }
  if (want(VerifyScope::lemmas)) out.push_back(verify_lemmas(options));
  if (want(VerifyScope::engine)) out.push_back(verify_engine(options));
  if (want(VerifyScope::spot)) out.push_back(verify_spot_values(options));
  return out;
}

json suite_json(VerifyScope scope, const std::vector<SectionReport>& sections) {
  static constexpr const char* names[] = {"multipartite", "cartesian", "tensor", "lemmas", "engine", "spot", "all"};
  json list = json::array();
  std::size_t passed = 0, failed = 0;
  json first = nullptr;
  for (const auto& s : sections) {
    passed += s.passed();
    failed += s.failed();
    if (first.is_null()) {
      if (const auto* f = s.first_failure()) first = {{"section", s.name}, {"key", f->key}, {"detail", f->detail}};
    }
    list.push_back(s.to_json());
  }
  return {{"scope", names[static_cast<int>(scope)]},
          {"passed", passed},
          {"failed", failed},
          {"first_counterexample", std::move(first)},
          {"sections", std::move(list)}};
}

}  // namespace spreadlab
