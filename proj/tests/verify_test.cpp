#include <gtest/gtest.h>

#include "spreadlab/error.hpp"
#include "spreadlab/verify.hpp"

namespace spreadlab {
namespace {

VerifyOptions small_options() {
  VerifyOptions o;
  o.max_n = 5;
  o.max_product = 12;
  o.exact_product_cap = 12;
  o.trials = 20;
  o.engine_trials = 50;
  o.random_trees = 4;
  return o;
}

TEST(VerifyTest, SmallSweepPasses) {
  for (const auto& section : verify_suite(VerifyScope::all, small_options())) {
    EXPECT_TRUE(section.ok()) << section.name << ": " << section.first_failure()->key;
    EXPECT_GT(section.checks.size(), 0U) << section.name;
  }
}

TEST(VerifyTest, ChecksAreKeySorted) {
  const auto s = verify_lemmas(small_options());
  for (std::size_t i = 1; i < s.checks.size(); ++i) EXPECT_LT(s.checks[i - 1].key, s.checks[i].key);
}

TEST(VerifyTest, ScopesSelectSections) {
  auto names = [](VerifyScope scope) {
    std::vector<std::string> out;
    for (const auto& s : verify_suite(scope, small_options())) out.push_back(s.name);
    return out;
  };
  EXPECT_EQ(names(VerifyScope::multipartite), (std::vector<std::string>{"multipartite-min-k", "multipartite-dynamo"}));
  EXPECT_EQ(names(VerifyScope::tensor), (std::vector<std::string>{"tensor", "double-cover"}));
  EXPECT_EQ(parse_verify_scope("lemmas"), VerifyScope::lemmas);
  EXPECT_THROW(parse_verify_scope("everything"), Error);
}

TEST(VerifyTest, ReportIndependentOfWorkers) {
  VerifyOptions one = small_options();
  VerifyOptions many = small_options();
  many.workers = 4;
  EXPECT_EQ(suite_json(VerifyScope::all, verify_suite(VerifyScope::all, one)).dump(),
            suite_json(VerifyScope::all, verify_suite(VerifyScope::all, many)).dump());
}

TEST(VerifyTest, SeedChangesRandomFamilies) {
  VerifyOptions a = small_options();
  VerifyOptions b = small_options();
  b.rng_seed = 2;
  EXPECT_NE(verify_lemmas(a).checks.front().key, verify_lemmas(b).checks.front().key);
}

TEST(VerifyTest, FailuresSurfaceAsCounterexample) {
  // A solver limit below the catalogue size turns every exact check into an
  // error, which must be reported as a failed check.
  VerifyOptions o = small_options();
  o.solver_limit = 3;
  const auto s = verify_multipartite_dynamo(o);
  ASSERT_FALSE(s.ok());
  ASSERT_NE(s.first_failure(), nullptr);
  EXPECT_EQ(s.first_failure()->detail["error"]["code"], "solver_limit_exceeded");
  const auto j = suite_json(VerifyScope::multipartite, {s});
  EXPECT_FALSE(j["first_counterexample"].is_null());
  EXPECT_GT(j["failed"].get<std::size_t>(), 0U);
}

}  // namespace
}  // namespace spreadlab
