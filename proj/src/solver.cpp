#include "spreadlab/solver.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "parallel.hpp"
#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

constexpr std::uint64_t kChunk = 4096;

__extension__ using Wide = unsigned __int128;

std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

// Graph packed into word masks for the inner search loop.
struct MaskGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> adjacency;
  std::vector<std::size_t> needed;
  std::uint64_t all = 0;
  std::uint64_t convertible = 0;

  MaskGraph(const Graph& graph, const Rule& rule) : n(graph.order()), adjacency(n, 0), needed(n) {
    all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : graph.neighbors(v)) adjacency[v] |= bit(u);
      needed[v] = rule.threshold(graph.degree(v));
      if (needed[v] != Rule::never) convertible |= bit(v);
    }
  }

  bool converts(std::uint64_t black) const {
    while (true) {
      std::uint64_t next = black;
      std::uint64_t white = convertible & ~black;
      while (white != 0) {
        const int v = std::countr_zero(white);
        white &= white - 1;
        if (static_cast<std::size_t>(std::popcount(adjacency[v] & black)) >= needed[v]) next |= bit(v);
      }
      if (next == black) return black == all;
      black = next;
    }
  }
};

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return static_cast<std::uint64_t>(result);
}

// Indices into an m-element pool of the lexicographic combination with the
// given rank.
std::vector<std::size_t> unrank(std::uint64_t rank, std::size_t m, std::size_t r) {
  std::vector<std::size_t> idx(r);
  std::size_t c = 0;
  for (std::size_t i = 0; i < r; ++i) {
    while (true) {
      const std::uint64_t block = binomial(m - c - 1, r - i - 1);
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    idx[i] = c++;
  }
  return idx;
}

struct Search {
  const MaskGraph& graph;
  std::uint64_t forced;
  std::vector<std::size_t> pool;

  // First rank in [begin, end) whose combination of `r` pool vertices,
  // together with the forced vertices, converts; `end` if none.
  std::uint64_t first_success(std::size_t r, std::uint64_t begin, std::uint64_t end) const {
    const std::size_t m = pool.size();
    auto idx = unrank(begin, m, r);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      std::uint64_t mask = forced;
      for (auto i : idx) mask |= bit(pool[i]);
      if (graph.converts(mask)) return rank;
      // Advance to the next combination.
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return end;
  }

  std::uint64_t first_success(std::size_t r, std::size_t workers) const {
    const std::uint64_t total = binomial(pool.size(), r);
    if (workers <= 1 || total <= kChunk) return first_success(r, 0, total);
    // Rounds of `workers` consecutive chunks; the earliest successful chunk
    // of a round holds the least rank overall.
    for (std::uint64_t round = 0; round < total; round += kChunk * workers) {
      std::vector<std::uint64_t> found(workers, total);
      detail::parallel_for(workers, workers, [&](std::size_t w) {
        const std::uint64_t begin = round + w * kChunk;
        if (begin >= total) return;
        const std::uint64_t end = std::min(total, begin + kChunk);
        const std::uint64_t hit = first_success(r, begin, end);
        if (hit != end) found[w] = hit;
      });
      for (auto hit : found) {
        if (hit != total) return hit;
      }
    }
    return total;
  }
};

}  // namespace

std::size_t solver_limit_from_environment() {
  const char* raw = std::getenv("SPREADLAB_SOLVER_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultSolverLimit;
  std::size_t value = 0;
  const char* last = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, last, value);
  if (ec != std::errc() || ptr != last || value < 1 || value > kMaxSolverLimit) {
    throw Error(ErrorCode::invalid_argument, std::string("SPREADLAB_SOLVER_LIMIT must be an integer in [1, ") +
                                                 std::to_string(kMaxSolverLimit) + "], got '" + raw + "'");
  }
  return value;
}

VertexSet forced_vertices(const Graph& graph, const Rule& rule) {
  VertexSet forced(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (rule.threshold(graph.degree(v)) == Rule::never) forced.insert(v);
  }
  return forced;
}

SolveOutcome min_conversion(const Graph& graph, const Rule& rule, const SolveOptions& options) {
  const std::size_t n = graph.order();
  const std::size_t limit = std::min(options.vertex_limit, kMaxSolverLimit);
  if (n > limit) {
    throw Error(ErrorCode::solver_limit_exceeded, "graph has " + std::to_string(n) +
                                                      " vertices; exact solver limit is " +
                                                      std::to_string(limit));
  }
  const MaskGraph packed(graph, rule);
  Search search{packed, ~packed.convertible & packed.all, {}};
  for (std::size_t v = 0; v < n; ++v) {
    if ((search.forced & bit(v)) == 0) search.pool.push_back(v);
  }

  const std::size_t floor = static_cast<std::size_t>(std::popcount(search.forced));
  const std::size_t ceiling = std::min(n, options.budget.value_or(n));
  std::uint64_t explored = 0;
  for (std::size_t size = floor; size <= ceiling; ++size) {
    const std::size_t r = size - floor;
    const std::uint64_t total = binomial(search.pool.size(), r);
    const std::uint64_t hit = search.first_success(r, options.workers);
    if (hit != total) {
      auto idx = unrank(hit, search.pool.size(), r);
      std::uint64_t mask = search.forced;
      for (auto i : idx) mask |= bit(search.pool[i]);
      return SolveResult{size, VertexSet::from_mask(n, mask), explored + hit + 1};
    }
    explored += total;
  }
  return NoSetWithinBudget{options.budget.value_or(n), explored};
}

SolveResult minimum_conversion_set(const Graph& graph, const Rule& rule, const SolveOptions& options) {
  SolveOptions unbounded = options;
  unbounded.budget.reset();
  auto outcome = min_conversion(graph, rule, unbounded);
  if (auto* result = std::get_if<SolveResult>(&outcome)) return *result;
  // V(G) always converts, so an unbudgeted search cannot come back empty.
  throw Error(ErrorCode::budget_exhausted, "exhaustive search found no converting set");
}

VertexSet shrink_to_minimal(const Graph& graph, const Rule& rule, const VertexSet& set) {
  if (!is_conversion_set(graph, rule, set).converts) {
    throw Error(ErrorCode::precondition_violated, "set to shrink does not convert the graph under " +
                                                      rule.to_string());
  }
  VertexSet current = set;
  bool removed = true;
  while (removed) {
    removed = false;
    for (Vertex v : current.to_vector()) {
      VertexSet candidate = current;
      candidate.erase(v);
      if (is_conversion_set(graph, rule, candidate).converts) {
        current = std::move(candidate);
        removed = true;
        break;
      }
    }
  }
  return current;
}

}  // namespace spreadlab
