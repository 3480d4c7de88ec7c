#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "spreadlab/conversion.hpp"
#include "spreadlab/graph.hpp"
#include "spreadlab/vertex_set.hpp"

namespace spreadlab {

enum class Construction {
  cartesian_k_threshold,
  cartesian_dynamo,
  cartesian_dynamo_reduced,
  tensor_k_threshold,
  tensor_dynamo,
};

std::string_view construction_name(Construction c) noexcept;

/// Upper bound on the optimum of a product graph, certified by `witness`
/// (flattened product ids). Every report returned by the functions below
/// has been checked by simulation; a failed check throws
/// Error(verification_failed).
struct BoundReport {
  std::size_t bound = 0;
  VertexSet witness;
  Construction construction = Construction::cartesian_k_threshold;
  bool verified = false;
  std::size_t steps = 0;
  /// Isolated product vertices folded into `bound` by tensor_general.
  std::size_t isolated = 0;
};

/// S_G x S_H; bound |S_G||S_H|.
BoundReport cartesian_k_witness(const Graph& left, const VertexSet& left_set, const Graph& right,
                                const VertexSet& right_set, std::size_t k);

/// {(u, v) : u in D_G or v in D_H}; bound |D_G||V(H)| + |D_H||V(G)| - |D_G||D_H|.
BoundReport cartesian_dynamo_witness(const Graph& left, const VertexSet& left_dynamo,
                                     const Graph& right, const VertexSet& right_dynamo);

/// The cartesian_dynamo_witness set with D_G x D_H removed. Both factors
/// must be free of isolated vertices and both dynamos minimal.
BoundReport cartesian_dynamo_witness_reduced(const Graph& left, const VertexSet& left_dynamo,
                                             const Graph& right, const VertexSet& right_dynamo);

/// S_G x V(H) if |S_G||V(H)| <= |S_H||V(G)|, else V(G) x S_H. Both factors
/// must be free of isolated vertices.
BoundReport tensor_k_witness(const Graph& left, const VertexSet& left_set, const Graph& right,
                             const VertexSet& right_set, std::size_t k);

/// Majority analogue of tensor_k_witness.
BoundReport tensor_dynamo_witness(const Graph& left, const VertexSet& left_dynamo,
                                  const Graph& right, const VertexSet& right_dynamo);

/// Supplies a converting set for a factor graph (no isolated vertices).
using FactorWitnessProvider = std::function<VertexSet(const Graph&, const Rule&)>;

/// Minimum converting set from the exact solver.
VertexSet minimum_factor_witness(const Graph& graph, const Rule& rule);

/// Tensor bound for arbitrary factors: run the tensor construction on the
/// isolated-free cores and add every isolated vertex of G x H.
BoundReport tensor_general(const Graph& left, const Graph& right, const Rule& rule,
                           const FactorWitnessProvider& provider = minimum_factor_witness);

/// i_G |V(H)| + i_H |V(G)| - i_G i_H.
std::size_t tensor_isolated_count(const Graph& left, const Graph& right);

}  // namespace spreadlab
