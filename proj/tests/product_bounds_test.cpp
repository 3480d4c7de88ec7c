#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/product_bounds.hpp"
#include "spreadlab/solver.hpp"

namespace spreadlab {
namespace {

const Rule kMajority = Rule::majority();

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::invalid_argument;
}

TEST(CartesianKTest, Examples) {
  const Graph p3 = path_graph(3);
  const VertexSet ends(3, {0, 2});
  const BoundReport r = cartesian_k_witness(p3, ends, p3, ends, 2);
  EXPECT_EQ(r.bound, 4U);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.witness, VertexSet(9, {0, 2, 6, 8}));
  EXPECT_TRUE(is_conversion_set(cartesian_product(p3, p3), Rule::k_threshold(2), r.witness).converts);

  const Graph k2 = complete_graph(2);
  const BoundReport one = cartesian_k_witness(k2, VertexSet(2, {0}), k2, VertexSet(2, {0}), 1);
  EXPECT_EQ(one.bound, 1U);
  EXPECT_EQ(one.witness, VertexSet(4, {0}));
  EXPECT_EQ(one.construction, Construction::cartesian_k_threshold);
}

TEST(CartesianKTest, RejectsNonConvertingFactorSet) {
  const Graph p3 = path_graph(3);
  try {
    cartesian_k_witness(p3, VertexSet(3, {0}), p3, VertexSet(3, {0, 2}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition_violated);
    EXPECT_NE(std::string(e.what()).find("left"), std::string::npos);
  }
  try {
    cartesian_k_witness(p3, VertexSet(3, {0, 2}), p3, VertexSet(3, {1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("right"), std::string::npos);
  }
}

TEST(CartesianDynamoTest, Examples) {
  const Graph k2 = complete_graph(2);
  const BoundReport a = cartesian_dynamo_witness(k2, VertexSet(2, {0}), k2, VertexSet(2, {0}));
  EXPECT_EQ(a.bound, 3U);
  EXPECT_EQ(a.witness.count(), 3U);

  const Graph c4 = cycle_graph(4);
  const BoundReport b = cartesian_dynamo_witness(c4, VertexSet(4, {0}), c4, VertexSet(4, {0}));
  EXPECT_EQ(b.bound, 7U);
  EXPECT_TRUE(b.verified);

  const Graph p3 = path_graph(3);
  const BoundReport all = cartesian_dynamo_witness(p3, p3.vertices(), k2, k2.vertices());
  EXPECT_TRUE(all.witness.is_full());
  EXPECT_EQ(all.bound, 6U);
}

TEST(CartesianDynamoReducedTest, Examples) {
  const Graph k2 = complete_graph(2);
  const BoundReport r = cartesian_dynamo_witness_reduced(k2, VertexSet(2, {0}), k2, VertexSet(2, {0}));
  EXPECT_EQ(r.bound, 2U);
  // (0,1) and (1,0).
  EXPECT_EQ(r.witness, VertexSet(4, {1, 2}));

  const Graph c4 = cycle_graph(4);
  const BoundReport s = cartesian_dynamo_witness_reduced(c4, VertexSet(4, {0}), k2, VertexSet(2, {0}));
  EXPECT_EQ(s.bound, 4U);
  EXPECT_TRUE(s.verified);
  const BoundReport full = cartesian_dynamo_witness(c4, VertexSet(4, {0}), k2, VertexSet(2, {0}));
  EXPECT_EQ(full.bound - s.bound, 1U);
}

TEST(CartesianDynamoReducedTest, Preconditions) {
  const Graph k2 = complete_graph(2);
  const Graph padded = make_graph(3, {{0, 1}});
  EXPECT_EQ(code_of([&] { cartesian_dynamo_witness_reduced(padded, VertexSet(3, {0, 2}), k2, VertexSet(2, {0})); }),
            ErrorCode::precondition_violated);
  const Graph c4 = cycle_graph(4);
  try {
    cartesian_dynamo_witness_reduced(c4, VertexSet(4, {0, 1}), k2, VertexSet(2, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not minimal"), std::string::npos);
  }
}

TEST(TensorKTest, Examples) {
  const Graph p3 = path_graph(3);
  const Graph k2 = complete_graph(2);
  const BoundReport r = tensor_k_witness(p3, VertexSet(3, {0, 2}), k2, k2.vertices(), 2);
  EXPECT_EQ(r.bound, 4U);
  EXPECT_EQ(r.witness, VertexSet(6, {0, 1, 4, 5}));

  const BoundReport tie = tensor_k_witness(k2, VertexSet(2, {0}), k2, VertexSet(2, {1}), 1);
  EXPECT_EQ(tie.bound, 2U);
  EXPECT_EQ(tie.witness, product_set(VertexSet(2, {0}), k2.vertices()));

  const Graph c4 = cycle_graph(4);
  const SolveResult s = minimum_conversion_set(c4, Rule::k_threshold(2));
  ASSERT_EQ(s.size, 2U);
  const BoundReport big = tensor_k_witness(c4, s.witness, c4, s.witness, 2);
  EXPECT_EQ(big.bound, 8U);
  EXPECT_TRUE(big.verified);
}

TEST(TensorKTest, PicksCheaperSide) {
  // |S_G||V(H)| = 2*2 = 4 > |S_H||V(G)| = 1*3 = 3.
  const Graph p3 = path_graph(3);
  const Graph k2 = complete_graph(2);
  const BoundReport r = tensor_k_witness(p3, VertexSet(3, {0, 2}), k2, VertexSet(2, {0}), 1);
  EXPECT_EQ(r.bound, 3U);
  EXPECT_EQ(r.witness, product_set(p3.vertices(), VertexSet(2, {0})));
}

TEST(TensorKTest, Preconditions) {
  const Graph k2 = complete_graph(2);
  const Graph padded = make_graph(3, {{0, 1}});
  EXPECT_EQ(code_of([&] { tensor_k_witness(padded, padded.vertices(), k2, k2.vertices(), 1); }),
            ErrorCode::precondition_violated);
  EXPECT_EQ(code_of([&] { tensor_k_witness(k2, VertexSet(2), k2, k2.vertices(), 1); }),
            ErrorCode::precondition_violated);
}

TEST(TensorDynamoTest, Examples) {
  const Graph p3 = path_graph(3);
  const Graph k2 = complete_graph(2);
  const BoundReport r = tensor_dynamo_witness(p3, VertexSet(3, {1}), k2, VertexSet(2, {0}));
  EXPECT_EQ(r.bound, 2U);
  EXPECT_EQ(r.witness, VertexSet(6, {2, 3}));
  EXPECT_EQ(r.construction, Construction::tensor_dynamo);

  const BoundReport kk = tensor_dynamo_witness(k2, VertexSet(2, {0}), k2, VertexSet(2, {0}));
  EXPECT_EQ(kk.bound, 2U);
  EXPECT_EQ(kk.witness, VertexSet(4, {0, 1}));
}

TEST(TensorGeneralTest, Examples) {
  const Graph padded = make_graph(3, {{0, 1}});
  const Graph k2 = complete_graph(2);
  EXPECT_EQ(tensor_isolated_count(padded, k2), 2U);
  const BoundReport r = tensor_general(padded, k2, kMajority);
  EXPECT_EQ(r.bound, 4U);
  EXPECT_EQ(r.isolated, 2U);
  // Isolated product vertices (2,0) and (2,1) are in the witness.
  EXPECT_TRUE(r.witness.contains(4));
  EXPECT_TRUE(r.witness.contains(5));

  const Graph p3 = path_graph(3);
  const BoundReport plain = tensor_general(p3, k2, kMajority);
  const BoundReport core =
      tensor_dynamo_witness(p3, minimum_factor_witness(p3, kMajority), k2, minimum_factor_witness(k2, kMajority));
  EXPECT_EQ(plain.bound, core.bound);
  EXPECT_EQ(plain.witness, core.witness);

  const BoundReport edgeless = tensor_general(empty_graph(3), empty_graph(2), Rule::k_threshold(2));
  EXPECT_EQ(edgeless.bound, 6U);
  EXPECT_TRUE(edgeless.witness.is_full());
}

TEST(TensorGeneralTest, CustomProvider) {
  const Graph c4 = cycle_graph(4);
  const Graph k2 = complete_graph(2);
  int calls = 0;
  const BoundReport r = tensor_general(c4, k2, kMajority, [&](const Graph& g, const Rule&) {
    ++calls;
    return g.vertices();
  });
  EXPECT_EQ(calls, 2);
  EXPECT_EQ(r.bound, 8U);
}

// Every construction on random isolated-free factors verifies and, for
// small products, is no better than the exact optimum.
TEST(ProductBoundsTest, RandomFactorsRespectExactOptimum) {
  std::mt19937_64 rng(47);
  int tested = 0;
  while (tested < 40) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 3, 70);
    const Graph h = oracle::random_graph(rng, 2 + rng() % 3, 70);
    if (!analyze(g).isolated.empty() || !analyze(h).isolated.empty()) continue;
    ++tested;
    const Graph cart = cartesian_product(g, h);
    const Graph tens = tensor_product(g, h);
    for (std::size_t k = 1; k <= 3; ++k) {
      const Rule rule = Rule::k_threshold(k);
      const auto sg = minimum_conversion_set(g, rule).witness;
      const auto sh = minimum_conversion_set(h, rule).witness;
      EXPECT_LE(minimum_conversion_set(cart, rule).size, cartesian_k_witness(g, sg, h, sh, k).bound);
      EXPECT_LE(minimum_conversion_set(tens, rule).size, tensor_k_witness(g, sg, h, sh, k).bound);
    }
    const auto dg = minimum_conversion_set(g, kMajority).witness;
    const auto dh = minimum_conversion_set(h, kMajority).witness;
    const std::size_t optimum = minimum_conversion_set(cart, kMajority).size;
    const BoundReport full = cartesian_dynamo_witness(g, dg, h, dh);
    const BoundReport reduced = cartesian_dynamo_witness_reduced(g, dg, h, dh);
    EXPECT_LE(optimum, reduced.bound);
    EXPECT_EQ(full.bound - reduced.bound, dg.count() * dh.count());
    EXPECT_FALSE(reduced.witness.empty());
    EXPECT_LE(minimum_conversion_set(tens, kMajority).size, tensor_dynamo_witness(g, dg, h, dh).bound);
  }
}

}  // namespace
}  // namespace spreadlab
