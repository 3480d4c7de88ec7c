#pragma once

// Deliberately naive reference implementations for tests. They share no
// code with the library beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "spreadlab/graph.hpp"

namespace oracle {

using spreadlab::Graph;
using spreadlab::Vertex;

struct Threshold {
  bool majority = false;
  std::size_t k = 0;
};

inline bool can_flip(std::size_t degree, std::size_t black_neighbors, Threshold rule) {
  if (rule.majority) return degree > 0 && 2 * black_neighbors >= degree;
  return degree >= rule.k && black_neighbors >= rule.k;
}

// Full synchronous snapshots until nothing changes.
inline std::vector<std::vector<bool>> snapshots(const Graph& g, Threshold rule, std::vector<bool> black) {
  std::vector<std::vector<bool>> history{black};
  while (true) {
    std::vector<bool> next = black;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (black[v]) continue;
      std::size_t count = 0;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (g.adjacent(v, u) && black[u]) ++count;
      }
      if (can_flip(g.degree(v), count, rule)) next[v] = true;
    }
    if (next == black) return history;
    black = next;
    history.push_back(black);
  }
}

inline bool converts(const Graph& g, Threshold rule, const std::vector<Vertex>& seed) {
  std::vector<bool> black(g.order(), false);
  for (Vertex v : seed) black[v] = true;
  auto last = snapshots(g, rule, black).back();
  return std::all_of(last.begin(), last.end(), [](bool b) { return b; });
}

// Smallest converting set, lexicographically least among ties, by scanning
// all 2^n subsets.
inline std::vector<Vertex> minimum(const Graph& g, Threshold rule) {
  const std::size_t n = g.order();
  std::optional<std::vector<Vertex>> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1U) set.push_back(v);
    }
    if (best && (set.size() > best->size() || (set.size() == best->size() && set > *best))) continue;
    if (converts(g, rule, set)) best = set;
  }
  return *best;
}

inline std::set<std::pair<Vertex, Vertex>> cartesian_edges(const Graph& g, const Graph& h) {
  std::set<std::pair<Vertex, Vertex>> out;
  const std::size_t nh = h.order();
  for (Vertex a = 0; a < g.order() * nh; ++a) {
    for (Vertex b = a + 1; b < g.order() * nh; ++b) {
      const Vertex u = a / nh, u2 = a % nh, v = b / nh, v2 = b % nh;
      if ((u == v && h.adjacent(u2, v2)) || (u2 == v2 && g.adjacent(u, v))) out.insert({a, b});
    }
  }
  return out;
}

inline std::set<std::pair<Vertex, Vertex>> tensor_edges(const Graph& g, const Graph& h) {
  std::set<std::pair<Vertex, Vertex>> out;
  const std::size_t nh = h.order();
  for (Vertex a = 0; a < g.order() * nh; ++a) {
    for (Vertex b = a + 1; b < g.order() * nh; ++b) {
      if (g.adjacent(a / nh, b / nh) && h.adjacent(a % nh, b % nh)) out.insert({a, b});
    }
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent) {
  std::vector<spreadlab::Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() % 100 < percent) edges.emplace_back(u, v);
    }
  }
  return spreadlab::make_graph(n, edges);
}

}  // namespace oracle
