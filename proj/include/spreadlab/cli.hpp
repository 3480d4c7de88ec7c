#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadlab/conversion.hpp"
#include "spreadlab/verify.hpp"

namespace spreadlab::cli {

enum class Command { gen, simulate, solve, bound, verify };
enum class OutputFormat { text, json };
enum class ProductKind { cartesian, tensor };

/// Exactly one of `file` and `family` must be set.
struct GraphSource {
  std::optional<std::string> file;
  std::optional<std::string> family;
};

struct RunConfig {
  Command command = Command::gen;
  OutputFormat format = OutputFormat::text;
  std::optional<Rule> rule;

  GraphSource graph;
  /// simulate: seed set.
  std::vector<Vertex> seed;

  // bound
  ProductKind product = ProductKind::cartesian;
  GraphSource left;
  GraphSource right;
  std::optional<std::vector<Vertex>> left_set;
  std::optional<std::vector<Vertex>> right_set;
  /// Construction number 3-7; all applicable ones when unset.
  std::optional<int> theorem;

  // solve
  std::optional<std::size_t> budget;

  // verify
  VerifyScope scope = VerifyScope::all;
  VerifyOptions verify;

  std::size_t solver_limit = kDefaultSolverLimit;
  std::size_t workers = 1;
  std::uint64_t rng_seed = 1;
  bool timing = false;
};

/// Comma-separated ids with inclusive ranges, e.g. "0,3-5".
std::vector<Vertex> parse_vertex_list(const std::string& text);

/// Runs one command. Reports go to `out`; in text mode errors go to `err`,
/// in JSON mode they are part of the report. Returns the exit status:
/// 0 success, 1 rejected input, 3 some verification check failed.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches; usage errors return 2.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spreadlab::cli
