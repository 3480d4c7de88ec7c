#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "spreadlab/solver.hpp"

namespace spreadlab {

enum class VerifyScope { multipartite, cartesian, tensor, lemmas, engine, spot, all };

/// Throws Error(invalid_argument) for an unknown name.
VerifyScope parse_verify_scope(const std::string& name);

struct VerifyOptions {
  /// Vertex cap; each section falls back to its own default when unset
  /// (8 for the multipartite k sweep, 9 for the multipartite dynamo sweep,
  /// 12 for the random-graph lemma sweep).
  std::optional<std::size_t> max_n;
  std::size_t max_product = 36;
  /// Products up to this order are also solved exactly.
  std::size_t exact_product_cap = 20;
  std::size_t trials = 200;
  std::size_t engine_trials = 1000;
  std::size_t random_trees = 20;
  std::size_t max_tree_n = 8;
  std::uint64_t rng_seed = 1;
  std::size_t workers = 1;
  std::size_t solver_limit = kDefaultSolverLimit;
};

struct CheckOutcome {
  std::string key;
  bool pass = false;
  nlohmann::json detail;
};

/// Checks in canonical (key-sorted) order.
struct SectionReport {
  std::string name;
  std::vector<CheckOutcome> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  const CheckOutcome* first_failure() const;
  nlohmann::json to_json() const;
};

// One function per verification family. All are deterministic in
// (options minus workers).
SectionReport verify_multipartite_min_k(const VerifyOptions& options);
SectionReport verify_multipartite_dynamo(const VerifyOptions& options);
/// Cartesian constructions over the factor catalogue, including the
/// edgeless-factor tightness check.
SectionReport verify_cartesian(const VerifyOptions& options);
/// Tensor constructions over the factor catalogue.
SectionReport verify_tensor(const VerifyOptions& options);
/// G x K2 doubling and tightness of the tensor bounds for connected
/// bipartite G.
SectionReport verify_double_cover(const VerifyOptions& options);
/// Minimal-dynamo complement and half-bound over seeded random graphs.
SectionReport verify_lemmas(const VerifyOptions& options);
/// Randomised conversion-engine invariants.
SectionReport verify_engine(const VerifyOptions& options);
/// Fixed small optima.
SectionReport verify_spot_values(const VerifyOptions& options);

std::vector<SectionReport> verify_suite(VerifyScope scope, const VerifyOptions& options);
nlohmann::json suite_json(VerifyScope scope, const std::vector<SectionReport>& sections);

}  // namespace spreadlab
