#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "spreadlab/graph.hpp"

namespace spreadlab {

/// Edge-list text format: the first non-comment line is "n m", followed by
/// exactly m lines "u v" with 0-indexed ids. Lines whose first non-blank
/// character is '#' and blank lines are ignored. Self-loops, out-of-range
/// ids and repeated edges (in either orientation) are rejected with
/// Error(parse_error) carrying the 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph parse_graph_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& graph);

/// A graph named by the family grammar: "path:N", "cycle:N", "complete:N",
/// "star:N", "empty:N", "tree:N,SEED", "multipartite:P1,P2,...",
/// "gnp:N,NUM/DEN,SEED".
struct FamilyGraph {
  std::string family;
  Graph graph;
  /// Set for the multipartite family.
  std::optional<MultipartiteSpec> multipartite;
};

/// Throws Error(invalid_argument) on an unknown family or bad parameters.
FamilyGraph parse_family(const std::string& text);

}  // namespace spreadlab
