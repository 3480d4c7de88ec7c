#pragma once

#include <cstddef>

#include "spreadlab/graph.hpp"
#include "spreadlab/vertex_set.hpp"

namespace spreadlab {

/// Closed-form optimum for a complete multipartite graph together with a
/// witness in the MultipartiteSpec id layout.
struct MultipartiteAnswer {
  std::size_t value = 0;
  VertexSet witness;
  /// Upper bound on the steps the witness needs to colour the graph.
  std::size_t predicted_steps = 0;
};

/// Vertices of degree < k: the union of blocks with n - p_i < k.
VertexSet low_degree_blocks(const MultipartiteSpec& spec, std::size_t k);

/// n if n <= k, else max(|X|, k) with X = low_degree_blocks(spec, k).
std::size_t multipartite_min_k(const MultipartiteSpec& spec, std::size_t k);

/// Witness for multipartite_min_k:
///  - n <= k: every vertex, 0 steps;
///  - k <= |X|: X, 1 step;
///  - otherwise X plus whole non-X blocks in index order while they fit the
///    remaining budget k - |X|, then a strict prefix of the first block that
///    does not fit; 2 steps.
MultipartiteAnswer multipartite_min_k_witness(const MultipartiteSpec& spec, std::size_t k);

/// ceil((n - p_1) / 2), witnessed by the first that many ids after block 1;
/// 2 steps.
MultipartiteAnswer multipartite_dynamo(const MultipartiteSpec& spec);

}  // namespace spreadlab
