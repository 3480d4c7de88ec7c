#include "spreadlab/multipartite.hpp"

#include <algorithm>

#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

void require_k(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k-threshold rule needs k >= 1");
}

}  // namespace

VertexSet low_degree_blocks(const MultipartiteSpec& spec, std::size_t k) {
  const std::size_t n = spec.order();
  VertexSet low(n);
  for (std::size_t i = 0; i < spec.part_count(); ++i) {
    if (n - spec.part(i) < k) low |= spec.block(i);
  }
  return low;
}

std::size_t multipartite_min_k(const MultipartiteSpec& spec, std::size_t k) {
  require_k(k);
  const std::size_t n = spec.order();
  if (n <= k) return n;
  return std::max(low_degree_blocks(spec, k).count(), k);
}

MultipartiteAnswer multipartite_min_k_witness(const MultipartiteSpec& spec, std::size_t k) {
  require_k(k);
  const std::size_t n = spec.order();
  if (n <= k) return {n, VertexSet::full(n), 0};

  VertexSet low = low_degree_blocks(spec, k);
  const std::size_t low_count = low.count();
  if (k <= low_count) return {low_count, low, 1};

  VertexSet witness = low;
  std::size_t remaining = k - low_count;
  for (std::size_t i = 0; i < spec.part_count() && remaining > 0; ++i) {
    if (low.contains(static_cast<Vertex>(spec.offset(i)))) continue;
    const std::size_t take = std::min(remaining, spec.part(i));
    for (std::size_t j = 0; j < take; ++j) witness.insert(static_cast<Vertex>(spec.offset(i) + j));
    remaining -= take;
  }
  return {k, witness, 2};
}

MultipartiteAnswer multipartite_dynamo(const MultipartiteSpec& spec) {
  const std::size_t n = spec.order();
  const std::size_t value = (n - spec.part(0) + 1) / 2;
  VertexSet witness(n);
  for (std::size_t j = 0; j < value; ++j) witness.insert(static_cast<Vertex>(spec.offset(1) + j));
  return {value, witness, 2};
}

}  // namespace spreadlab
