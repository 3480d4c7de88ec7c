#include "spreadlab/conversion.hpp"

#include <charconv>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

Rule Rule::k_threshold(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k-threshold rule needs k >= 1");
  return Rule(Kind::k_threshold, k);
}

std::size_t Rule::threshold(std::size_t degree) const noexcept {
  if (kind_ == Kind::majority) return degree == 0 ? never : (degree + 1) / 2;
  return degree < k_ ? never : k_;
}

std::string Rule::to_string() const {
  return is_majority() ? std::string("majority") : "k:" + std::to_string(k_);
}

Rule Rule::parse(const std::string& text) {
  if (text == "majority") return majority();
  if (text.starts_with("k:")) {
    std::size_t k = 0;
    const char* first = text.data() + 2;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && first != last) return k_threshold(k);
  }
  throw Error(ErrorCode::invalid_argument, "unknown rule '" + text + "' (expected majority or k:<k>)");
}

VertexSet Trace::final_black() const {
  VertexSet black = seed;
  for (const auto& wave : waves) black |= wave;
  return black;
}

namespace {

void check_universe(const Graph& graph, const VertexSet& set) {
  if (set.universe() != graph.order()) {
    throw Error(ErrorCode::invalid_argument, "vertex set universe " + std::to_string(set.universe()) +
                                                 " does not match graph order " +
                                                 std::to_string(graph.order()));
  }
}

}  // namespace

VertexSet step(const Graph& graph, const Rule& rule, const VertexSet& black) {
  check_universe(graph, black);
  VertexSet next = black;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (black.contains(v)) continue;
    const std::size_t needed = rule.threshold(graph.degree(v));
    if (needed == Rule::never) continue;
    std::size_t seen = 0;
    for (Vertex u : graph.neighbors(v)) seen += black.contains(u) ? 1 : 0;
    if (seen >= needed) next.insert(v);
  }
  return next;
}

Trace run(const Graph& graph, const Rule& rule, const VertexSet& seed) {
  check_universe(graph, seed);
  const std::size_t n = graph.order();
  Trace trace;
  trace.seed = seed;

  std::vector<std::size_t> needed(n);
  for (Vertex v = 0; v < n; ++v) needed[v] = rule.threshold(graph.degree(v));

  // Black-neighbour counts are updated incrementally from each wave; a
  // white vertex joins the next wave once its count reaches its threshold.
  std::vector<std::size_t> black_neighbors(n, 0);
  VertexSet black = seed;
  VertexSet frontier = seed;
  while (true) {
    VertexSet wave(n);
    frontier.for_each([&](Vertex u) {
      for (Vertex v : graph.neighbors(u)) {
        if (black.contains(v)) continue;
        if (++black_neighbors[v] >= needed[v] && needed[v] != Rule::never) wave.insert(v);
      }
    });
    if (wave.empty()) break;
    black |= wave;
    trace.waves.push_back(wave);
    frontier = std::move(wave);
  }
  trace.converted = black.is_full();
  return trace;
}

ConversionCheck is_conversion_set(const Graph& graph, const Rule& rule, const VertexSet& seed) {
  Trace trace = run(graph, rule, seed);
  return {trace.converted, trace.converted ? trace.steps() : 0};
}

ConversionTimes conversion_times(const Trace& trace) {
  ConversionTimes times(trace.seed.universe());
  trace.seed.for_each([&](Vertex v) { times[v] = 0; });
  for (std::size_t t = 0; t < trace.waves.size(); ++t) {
    trace.waves[t].for_each([&](Vertex v) { times[v] = t + 1; });
  }
  return times;
}

ConversionTimes conversion_times(const Graph& graph, const Rule& rule, const VertexSet& seed) {
  return conversion_times(run(graph, rule, seed));
}

bool is_minimal(const Graph& graph, const Rule& rule, const VertexSet& set) {
  if (!is_conversion_set(graph, rule, set).converts) {
    throw Error(ErrorCode::precondition_violated, "set does not convert the graph under " + rule.to_string());
  }
  bool minimal = true;
  set.for_each([&](Vertex v) {
    if (!minimal) return;
    VertexSet smaller = set;
    smaller.erase(v);
    if (is_conversion_set(graph, rule, smaller).converts) minimal = false;
  });
  return minimal;
}

}  // namespace spreadlab
