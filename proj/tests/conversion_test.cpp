#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "spreadlab/conversion.hpp"
#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

const Rule kMajority = Rule::majority();

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> ids) { return VertexSet(n, ids); }

TEST(RuleTest, Thresholds) {
  EXPECT_EQ(kMajority.threshold(0), Rule::never);
  EXPECT_EQ(kMajority.threshold(1), 1U);
  EXPECT_EQ(kMajority.threshold(4), 2U);
  EXPECT_EQ(kMajority.threshold(5), 3U);
  const Rule k2 = Rule::k_threshold(2);
  EXPECT_EQ(k2.threshold(1), Rule::never);
  EXPECT_EQ(k2.threshold(7), 2U);
  EXPECT_THROW(Rule::k_threshold(0), Error);
}

TEST(RuleTest, TextForm) {
  EXPECT_EQ(Rule::parse("majority"), kMajority);
  EXPECT_EQ(Rule::parse("k:3"), Rule::k_threshold(3));
  EXPECT_EQ(Rule::parse(Rule::k_threshold(12).to_string()), Rule::k_threshold(12));
  for (const char* bad : {"k:", "k:0", "k:2x", "minority", "k:-1"}) EXPECT_THROW(Rule::parse(bad), Error) << bad;
}

TEST(StepTest, Examples) {
  EXPECT_EQ(step(cycle_graph(4), kMajority, set_of(4, {0})), set_of(4, {0, 1, 3}));
  const Graph g = complete_graph(4);
  EXPECT_EQ(step(g, Rule::k_threshold(3), g.vertices()), g.vertices());
  EXPECT_EQ(step(path_graph(3), Rule::k_threshold(2), set_of(3, {0, 2})), set_of(3, {0, 1, 2}));
}

TEST(StepTest, InputUnchanged) {
  const VertexSet black = set_of(4, {0});
  (void)step(cycle_graph(4), kMajority, black);
  EXPECT_EQ(black, set_of(4, {0}));
}

TEST(RunTest, Examples) {
  const Trace c4 = run(cycle_graph(4), kMajority, set_of(4, {0}));
  ASSERT_EQ(c4.waves.size(), 2U);
  EXPECT_EQ(c4.waves[0], set_of(4, {1, 3}));
  EXPECT_EQ(c4.waves[1], set_of(4, {2}));
  EXPECT_TRUE(c4.converted);
  EXPECT_EQ(c4.steps(), 2U);

  const Trace p4 = run(path_graph(4), Rule::k_threshold(2), set_of(4, {0, 3}));
  EXPECT_TRUE(p4.waves.empty());
  EXPECT_FALSE(p4.converted);

  const Trace empty = run(empty_graph(0), kMajority, VertexSet(0));
  EXPECT_TRUE(empty.converted);
  EXPECT_EQ(empty.steps(), 0U);
}

TEST(RunTest, IsolatedVerticesNeverConvert) {
  const Graph g = make_graph(3, {{0, 1}});
  EXPECT_FALSE(run(g, kMajority, set_of(3, {0})).converted);
  EXPECT_TRUE(run(g, kMajority, set_of(3, {0, 2})).converted);
}

TEST(RunTest, UniverseMismatchRejected) { EXPECT_THROW(run(cycle_graph(4), kMajority, VertexSet(5)), Error); }

TEST(ConversionSetTest, Examples) {
  const Graph c4 = cycle_graph(4);
  auto a = is_conversion_set(c4, kMajority, set_of(4, {0}));
  EXPECT_TRUE(a.converts);
  EXPECT_EQ(a.steps, 2U);
  auto b = is_conversion_set(c4, Rule::k_threshold(2), set_of(4, {0, 2}));
  EXPECT_TRUE(b.converts);
  EXPECT_EQ(b.steps, 1U);
  EXPECT_FALSE(is_conversion_set(c4, Rule::k_threshold(2), set_of(4, {0, 1})).converts);
}

TEST(ConversionTimesTest, Examples) {
  EXPECT_EQ(conversion_times(cycle_graph(4), kMajority, set_of(4, {0})),
            (ConversionTimes{0, 1, 2, 1}));
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(conversion_times(k4, kMajority, k4.vertices()), ConversionTimes(4, 0));
  EXPECT_EQ(conversion_times(path_graph(2), Rule::k_threshold(2), set_of(2, {0})),
            (ConversionTimes{0, std::nullopt}));
}

TEST(MinimalTest, Examples) {
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_minimal(c4, kMajority, set_of(4, {0})));
  EXPECT_FALSE(is_minimal(c4, kMajority, set_of(4, {0, 1})));
  EXPECT_TRUE(is_minimal(complete_graph(2), Rule::k_threshold(2), set_of(2, {0, 1})));
  try {
    is_minimal(c4, Rule::k_threshold(2), set_of(4, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition_violated);
  }
}

// The incremental engine reproduces the naive snapshot simulation exactly.
TEST(RunTest, MatchesSnapshotOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng() % 11;
    const Graph g = oracle::random_graph(rng, n, static_cast<unsigned>(20 + rng() % 60));
    const std::size_t pick = rng() % 4;
    const Rule rule = pick == 0 ? kMajority : Rule::k_threshold(pick);
    const oracle::Threshold th{rule.is_majority(), rule.is_majority() ? 0 : rule.k()};
    std::vector<bool> start(n);
    VertexSet seed(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) start[v] = true, seed.insert(v);
    }
    const auto history = oracle::snapshots(g, th, start);
    const Trace trace = run(g, rule, seed);
    ASSERT_EQ(trace.steps() + 1, history.size());
    VertexSet black = seed;
    for (std::size_t t = 0; t < trace.waves.size(); ++t) {
      black |= trace.waves[t];
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(black.contains(v), history[t + 1][v]);
    }
    EXPECT_EQ(trace.converted, std::all_of(history.back().begin(), history.back().end(), [](bool b) { return b; }));
  }
}

TEST(RunTest, RuleEquivalenceOnRegularGraphs) {
  std::mt19937_64 rng(23);
  for (const Graph& g : {cycle_graph(7), complete_graph(6), cartesian_product(cycle_graph(5), complete_graph(2))}) {
    const std::size_t d = g.degree(0);
    for (int trial = 0; trial < 40; ++trial) {
      VertexSet seed(g.order());
      for (Vertex v = 0; v < g.order(); ++v) {
        if (rng() % 3 == 0) seed.insert(v);
      }
      const Trace a = run(g, kMajority, seed);
      const Trace b = run(g, Rule::k_threshold((d + 1) / 2), seed);
      EXPECT_EQ(a.waves, b.waves);
      EXPECT_EQ(a.converted, b.converted);
    }
  }
}

}  // namespace
}  // namespace spreadlab
