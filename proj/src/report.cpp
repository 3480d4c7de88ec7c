#include "spreadlab/report.hpp"

namespace spreadlab {

using nlohmann::json;

json to_json(const VertexSet& set) { return set.to_vector(); }

json product_set_json(const VertexSet& set, std::size_t right_order) {
  json pairs = json::array();
  set.for_each([&](Vertex id) {
    const auto pv = ProductVertex::unflatten(id, right_order);
    pairs.push_back({pv.g, pv.h});
  });
  return {{"ids", to_json(set)}, {"pairs", std::move(pairs)}};
}

json to_json(const Graph& graph) {
  json edges = json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return {{"n", graph.order()}, {"m", graph.size()}, {"edges", std::move(edges)}};
}

json to_json(const ConversionTimes& times) {
  json out = json::array();
  for (const auto& t : times) out.push_back(t ? json(*t) : json(nullptr));
  return out;
}

json to_json(const Trace& trace) {
  json waves = json::array();
  for (const auto& wave : trace.waves) waves.push_back(to_json(wave));
  return {{"seed", to_json(trace.seed)},
          {"waves", std::move(waves)},
          {"converted", trace.converted},
          {"steps", trace.steps()},
          {"times", to_json(conversion_times(trace))}};
}

json to_json(const SolveOutcome& outcome) {
  if (const auto* result = std::get_if<SolveResult>(&outcome)) {
    return {{"found", true},
            {"size", result->size},
            {"witness", to_json(result->witness)},
            {"explored", result->explored}};
  }
  const auto& none = std::get<NoSetWithinBudget>(outcome);
  return {{"found", false}, {"budget", none.budget}, {"explored", none.explored}};
}

json to_json(const MultipartiteAnswer& answer) {
  return {{"value", answer.value},
          {"witness", to_json(answer.witness)},
          {"predicted_steps", answer.predicted_steps}};
}

json to_json(const BoundReport& report, std::size_t right_order) {
  return {{"construction", construction_name(report.construction)},
          {"bound", report.bound},
          {"witness", product_set_json(report.witness, right_order)},
          {"verified", report.verified},
          {"steps", report.steps},
          {"isolated", report.isolated}};
}

}  // namespace spreadlab
