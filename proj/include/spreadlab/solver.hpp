#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "spreadlab/conversion.hpp"
#include "spreadlab/graph.hpp"

namespace spreadlab {

inline constexpr std::size_t kDefaultSolverLimit = 24;
/// Subsets are machine-word masks, so no limit may exceed this.
inline constexpr std::size_t kMaxSolverLimit = 64;

/// kDefaultSolverLimit unless SPREADLAB_SOLVER_LIMIT holds a valid integer
/// in [1, kMaxSolverLimit]; throws Error(invalid_argument) on a malformed value.
std::size_t solver_limit_from_environment();

struct SolveOptions {
  /// Largest seed cardinality to try.
  std::optional<std::size_t> budget;
  std::size_t vertex_limit = kDefaultSolverLimit;
  /// Worker threads; the result never depends on this.
  std::size_t workers = 1;
};

struct SolveResult {
  std::size_t size = 0;
  /// Lexicographically least converting set of minimum size.
  VertexSet witness;
  /// Candidates tested in cardinality-then-lexicographic order, up to and
  /// including the witness.
  std::uint64_t explored = 0;
};

struct NoSetWithinBudget {
  std::size_t budget = 0;
  std::uint64_t explored = 0;
};

using SolveOutcome = std::variant<SolveResult, NoSetWithinBudget>;

/// Vertices every converting set must contain: degree < k under
/// k_threshold, isolated vertices under majority.
VertexSet forced_vertices(const Graph& graph, const Rule& rule);

/// Exhaustive search by cardinality, starting at |forced|, over supersets of
/// the forced vertices in lexicographic order. Throws
/// Error(solver_limit_exceeded) when the graph is larger than the limit.
SolveOutcome min_conversion(const Graph& graph, const Rule& rule, const SolveOptions& options = {});

/// min_conversion without a budget.
SolveResult minimum_conversion_set(const Graph& graph, const Rule& rule,
                                   const SolveOptions& options = {});

/// Greedy reduction: scan ids upward, delete the first vertex whose removal
/// keeps the set converting, restart; stop when no deletion is possible.
/// Throws Error(precondition_violated) if `set` does not convert.
VertexSet shrink_to_minimal(const Graph& graph, const Rule& rule, const VertexSet& set);

}  // namespace spreadlab
