#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/vertex_set.hpp"

namespace spreadlab {

/// Irreversible conversion rule: a white vertex turns black once the number
/// of black neighbours reaches its threshold.
class Rule {
 public:
  enum class Kind { k_threshold, majority };

  /// Throws Error(invalid_argument) unless k >= 1.
  static Rule k_threshold(std::size_t k);
  static Rule majority() { return Rule(Kind::majority, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_majority() const noexcept { return kind_ == Kind::majority; }
  /// Only meaningful for k_threshold.
  std::size_t k() const noexcept { return k_; }

  /// Black-neighbour count needed by a vertex of the given degree, or
  /// `never` when the vertex can only be black by seeding: degree < k under
  /// k_threshold, degree 0 under majority.
  std::size_t threshold(std::size_t degree) const noexcept;
  static constexpr std::size_t never = std::numeric_limits<std::size_t>::max();

  /// "majority" or "k:<k>".
  std::string to_string() const;
  /// Inverse of to_string; throws Error(invalid_argument).
  static Rule parse(const std::string& text);

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  Rule(Kind kind, std::size_t k) : kind_(kind), k_(k) {}

  Kind kind_;
  std::size_t k_;
};

struct Trace {
  VertexSet seed;
  /// waves[t - 1] holds the vertices first coloured at step t. Only
  /// non-empty waves are stored; the process stops at the first step that
  /// changes nothing.
  std::vector<VertexSet> waves;
  bool converted = false;

  std::size_t steps() const noexcept { return waves.size(); }
  VertexSet final_black() const;
};

/// Per-vertex colouring step: 0 for seed vertices, nullopt if never coloured.
using ConversionTimes = std::vector<std::optional<std::size_t>>;

struct ConversionCheck {
  bool converts = false;
  /// Steps to colour everything; meaningful only when `converts`.
  std::size_t steps = 0;
};

/// One synchronous update.
VertexSet step(const Graph& graph, const Rule& rule, const VertexSet& black);
Trace run(const Graph& graph, const Rule& rule, const VertexSet& seed);
ConversionCheck is_conversion_set(const Graph& graph, const Rule& rule, const VertexSet& seed);
ConversionTimes conversion_times(const Graph& graph, const Rule& rule, const VertexSet& seed);
ConversionTimes conversion_times(const Trace& trace);

/// True iff no single-vertex deletion from `set` still converts. Throws
/// Error(precondition_violated) if `set` itself does not convert.
bool is_minimal(const Graph& graph, const Rule& rule, const VertexSet& set);

}  // namespace spreadlab
