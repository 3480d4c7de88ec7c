#pragma once

#include "json.hpp"

#include "spreadlab/conversion.hpp"
#include "spreadlab/graph.hpp"
#include "spreadlab/multipartite.hpp"
#include "spreadlab/product_bounds.hpp"
#include "spreadlab/solver.hpp"

// JSON encodings shared by the CLI and the verification suite. Vertex sets
// are sorted id arrays; product sets also list (g, h) pairs.
namespace spreadlab {

nlohmann::json to_json(const VertexSet& set);
nlohmann::json product_set_json(const VertexSet& set, std::size_t right_order);
nlohmann::json to_json(const Graph& graph);
nlohmann::json to_json(const Trace& trace);
nlohmann::json to_json(const ConversionTimes& times);
nlohmann::json to_json(const SolveOutcome& outcome);
nlohmann::json to_json(const MultipartiteAnswer& answer);
nlohmann::json to_json(const BoundReport& report, std::size_t right_order);

}  // namespace spreadlab
