#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spreadlab/vertex_set.hpp"

namespace spreadlab {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with sorted
/// adjacency lists. Safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in increasing id
  /// order.
  Graph induced(const VertexSet& keep) const;
  /// Graph whose vertex `perm[v]` plays the role of `v`.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph make_graph(std::size_t, std::span<const Edge>);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph, merging duplicate and reversed pairs. Throws
/// Error(invalid_graph) naming the offending edge index on a self-loop or an
/// out-of-range endpoint.
Graph make_graph(std::size_t n, std::span<const Edge> edges);
inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Part sizes of a complete multipartite graph, kept sorted non-increasing.
/// Part i occupies the contiguous id block [offset(i), offset(i) + part(i)).
class MultipartiteSpec {
 public:
  /// Sorts `parts` non-increasing; requires at least two parts, all >= 1.
  explicit MultipartiteSpec(std::vector<std::size_t> parts);

  std::span<const std::size_t> parts() const noexcept { return parts_; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::size_t part(std::size_t i) const { return parts_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t order() const noexcept { return offsets_.back(); }
  std::size_t part_of(Vertex v) const;
  VertexSet block(std::size_t i) const;

  friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> offsets_;
};

struct EdgeProbability {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 2;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Star on n vertices: centre 0 joined to leaves 1..n-1.
Graph star_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_multipartite_graph(const MultipartiteSpec& spec);
/// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
/// order; for each, one draw x from std::mt19937_64(seed) is taken and the
/// edge is kept iff x % denominator < numerator.
Graph gnp_graph(std::size_t n, EdgeProbability p, std::uint64_t seed);
/// Uniform labelled tree on n vertices decoded from a Pruefer sequence whose
/// entries are `std::mt19937_64(seed)() % n`.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Flattened id of the product vertex (g, h): g * |V(H)| + h.
struct ProductVertex {
  Vertex g = 0;
  Vertex h = 0;

  static ProductVertex unflatten(Vertex id, std::size_t right_order) {
    return {static_cast<Vertex>(id / right_order), static_cast<Vertex>(id % right_order)};
  }
  Vertex flatten(std::size_t right_order) const {
    return static_cast<Vertex>(g * right_order + h);
  }
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

Graph cartesian_product(const Graph& left, const Graph& right);
Graph tensor_product(const Graph& left, const Graph& right);

/// Flattened set {(g, h) : g in left, h in right}.
VertexSet product_set(const VertexSet& left, const VertexSet& right);

struct StructureReport {
  std::vector<std::size_t> degrees;
  VertexSet isolated;
  /// Components as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<Vertex>> components;
  bool bipartite = true;
  /// 0/1 side per vertex; meaningful only when bipartite.
  std::vector<std::uint8_t> coloring;
  /// Simple odd cycle in traversal order when not bipartite.
  std::vector<Vertex> odd_cycle;
};

StructureReport analyze(const Graph& graph);

}  // namespace spreadlab
