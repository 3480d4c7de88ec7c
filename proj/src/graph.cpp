#include "spreadlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw Error(ErrorCode::invalid_graph, "edge " + std::to_string(i) + " (" + std::to_string(u) +
                                                ", " + std::to_string(v) +
                                                ") has an endpoint outside 0.." +
                                                std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::invalid_graph,
                  "edge " + std::to_string(i) + " is a self-loop on vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = adjacency_[v].size();
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> new_id(order(), 0);
  Vertex next = 0;
  keep.for_each([&](Vertex v) { new_id[v] = next++; });
  std::vector<Edge> kept;
  for (auto [u, v] : edges()) {
    if (keep.contains(u) && keep.contains(v)) kept.emplace_back(new_id[u], new_id[v]);
  }
  return make_graph(next, kept);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw Error(ErrorCode::invalid_argument, "permutation size mismatch");
  std::vector<Edge> moved;
  for (auto [u, v] : edges()) moved.emplace_back(perm[u], perm[v]);
  return make_graph(order(), moved);
}

MultipartiteSpec::MultipartiteSpec(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "complete multipartite graph needs at least two parts");
  }
  if (std::find(parts_.begin(), parts_.end(), std::size_t{0}) != parts_.end()) {
    throw Error(ErrorCode::invalid_argument, "partite sets must be non-empty");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  offsets_.resize(parts_.size() + 1, 0);
  std::partial_sum(parts_.begin(), parts_.end(), offsets_.begin() + 1);
}

std::size_t MultipartiteSpec::part_of(Vertex v) const {
  if (v >= order()) throw Error(ErrorCode::invalid_argument, "vertex outside multipartite graph");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), static_cast<std::size_t>(v));
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

VertexSet MultipartiteSpec::block(std::size_t i) const {
  VertexSet s(order());
  for (std::size_t v = offset(i); v < offset(i) + part(i); ++v) s.insert(static_cast<Vertex>(v));
  return s;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return make_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return make_graph(n, edges);
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return make_graph(n, edges);
}

Graph empty_graph(std::size_t n) { return make_graph(n, std::span<const Edge>{}); }

Graph complete_multipartite_graph(const MultipartiteSpec& spec) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.order(); ++u) {
    for (Vertex v = u + 1; v < spec.order(); ++v) {
      if (spec.part_of(u) != spec.part_of(v)) edges.emplace_back(u, v);
    }
  }
  return make_graph(spec.order(), edges);
}

Graph gnp_graph(std::size_t n, EdgeProbability p, std::uint64_t seed) {
  if (p.denominator == 0 || p.numerator > p.denominator) {
    throw Error(ErrorCode::invalid_argument, "edge probability must be NUM/DEN with 0 <= NUM <= DEN, DEN > 0");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() % p.denominator < p.numerator) edges.emplace_back(u, v);
    }
  }
  return make_graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "tree needs n >= 1");
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return make_graph(n, edges);
}

Graph cartesian_product(const Graph& left, const Graph& right) {
  const std::size_t nr = right.order();
  std::vector<Edge> edges;
  for (Vertex g = 0; g < left.order(); ++g) {
    for (auto [a, b] : right.edges()) {
      edges.emplace_back(ProductVertex{g, a}.flatten(nr), ProductVertex{g, b}.flatten(nr));
    }
  }
  for (auto [a, b] : left.edges()) {
    for (Vertex h = 0; h < nr; ++h) {
      edges.emplace_back(ProductVertex{a, h}.flatten(nr), ProductVertex{b, h}.flatten(nr));
    }
  }
  return make_graph(left.order() * nr, edges);
}

Graph tensor_product(const Graph& left, const Graph& right) {
  const std::size_t nr = right.order();
  std::vector<Edge> edges;
  const auto right_edges = right.edges();
  for (auto [a, b] : left.edges()) {
    for (auto [c, d] : right_edges) {
      edges.emplace_back(ProductVertex{a, c}.flatten(nr), ProductVertex{b, d}.flatten(nr));
      edges.emplace_back(ProductVertex{a, d}.flatten(nr), ProductVertex{b, c}.flatten(nr));
    }
  }
  return make_graph(left.order() * nr, edges);
}

VertexSet product_set(const VertexSet& left, const VertexSet& right) {
  const std::size_t nr = right.universe();
  VertexSet out(left.universe() * nr);
  left.for_each([&](Vertex g) {
    right.for_each([&](Vertex h) { out.insert(ProductVertex{g, h}.flatten(nr)); });
  });
  return out;
}

StructureReport analyze(const Graph& graph) {
  const std::size_t n = graph.order();
  StructureReport report;
  report.degrees = graph.degrees();
  report.isolated = VertexSet(n);
  report.coloring.assign(n, 0);

  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (report.degrees[root] == 0) report.isolated.insert(root);
    if (seen[root]) continue;
    std::vector<Vertex> component;
    std::queue<Vertex> queue;
    seen[root] = true;
    parent[root] = root;
    queue.push(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      component.push_back(u);
      for (Vertex v : graph.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          report.coloring[v] = static_cast<std::uint8_t>(1 - report.coloring[u]);
          queue.push(v);
        } else if (report.bipartite && report.coloring[v] == report.coloring[u]) {
          // Same BFS depth, so the tree paths to their common ancestor plus
          // the edge u-v close an odd simple cycle.
          report.bipartite = false;
          std::vector<Vertex> up_u{u};
          std::vector<Vertex> up_v{v};
          Vertex a = u;
          Vertex b = v;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            up_u.push_back(a);
            up_v.push_back(b);
          }
          up_v.pop_back();
          report.odd_cycle = up_u;
          report.odd_cycle.insert(report.odd_cycle.end(), up_v.rbegin(), up_v.rend());
        }
      }
    }
    std::sort(component.begin(), component.end());
    report.components.push_back(std::move(component));
  }
  return report;
}

}  // namespace spreadlab
