#include "spreadlab/product_bounds.hpp"

#include <string>

#include "spreadlab/error.hpp"
#include "spreadlab/solver.hpp"

namespace spreadlab {
namespace {

enum class Side { left, right };

const char* side_name(Side side) { return side == Side::left ? "left" : "right"; }

void require_converting(const Graph& graph, const VertexSet& set, const Rule& rule, Side side) {
  if (set.universe() != graph.order()) {
    throw Error(ErrorCode::invalid_argument, std::string(side_name(side)) +
                                                 " factor set universe does not match the factor order");
  }
  if (!is_conversion_set(graph, rule, set).converts) {
    throw Error(ErrorCode::precondition_violated, std::string(side_name(side)) +
                                                      " factor set does not convert its factor under " +
                                                      rule.to_string());
  }
}

void require_no_isolated(const Graph& graph, Side side) {
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (graph.degree(v) == 0) {
      throw Error(ErrorCode::precondition_violated, std::string(side_name(side)) +
                                                        " factor has isolated vertex " + std::to_string(v));
    }
  }
}

BoundReport certify(const Graph& product, const Rule& rule, VertexSet witness, std::size_t bound,
                    Construction construction) {
  if (witness.count() != bound) {
    throw Error(ErrorCode::verification_failed,
                std::string(construction_name(construction)) + ": witness has " +
                    std::to_string(witness.count()) + " vertices but the bound is " + std::to_string(bound));
  }
  const ConversionCheck check = is_conversion_set(product, rule, witness);
  if (!check.converts) {
    throw Error(ErrorCode::verification_failed,
                std::string(construction_name(construction)) + ": witness does not convert the product");
  }
  BoundReport report;
  report.bound = bound;
  report.witness = std::move(witness);
  report.construction = construction;
  report.verified = true;
  report.steps = check.steps;
  return report;
}

VertexSet cross_union(const Graph& left, const VertexSet& left_set, const Graph& right,
                      const VertexSet& right_set) {
  return product_set(left_set, right.vertices()) | product_set(left.vertices(), right_set);
}

BoundReport tensor_side_witness(const Graph& left, const VertexSet& left_set, const Graph& right,
                                const VertexSet& right_set, const Rule& rule, Construction construction) {
  require_no_isolated(left, Side::left);
  require_no_isolated(right, Side::right);
  require_converting(left, left_set, rule, Side::left);
  require_converting(right, right_set, rule, Side::right);
  const std::size_t left_cost = left_set.count() * right.order();
  const std::size_t right_cost = right_set.count() * left.order();
  VertexSet witness = left_cost <= right_cost ? product_set(left_set, right.vertices())
                                              : product_set(left.vertices(), right_set);
  return certify(tensor_product(left, right), rule, std::move(witness), std::min(left_cost, right_cost),
                 construction);
}

}  // namespace

std::string_view construction_name(Construction c) noexcept {
  switch (c) {
    case Construction::cartesian_k_threshold: return "cartesian-k-threshold";
    case Construction::cartesian_dynamo: return "cartesian-dynamo";
    case Construction::cartesian_dynamo_reduced: return "cartesian-dynamo-reduced";
    case Construction::tensor_k_threshold: return "tensor-k-threshold";
    case Construction::tensor_dynamo: return "tensor-dynamo";
  }
  return "unknown";
}

BoundReport cartesian_k_witness(const Graph& left, const VertexSet& left_set, const Graph& right,
                                const VertexSet& right_set, std::size_t k) {
  const Rule rule = Rule::k_threshold(k);
  require_converting(left, left_set, rule, Side::left);
  require_converting(right, right_set, rule, Side::right);
  return certify(cartesian_product(left, right), rule, product_set(left_set, right_set),
                 left_set.count() * right_set.count(), Construction::cartesian_k_threshold);
}

BoundReport cartesian_dynamo_witness(const Graph& left, const VertexSet& left_dynamo, const Graph& right,
                                     const VertexSet& right_dynamo) {
  const Rule rule = Rule::majority();
  require_converting(left, left_dynamo, rule, Side::left);
  require_converting(right, right_dynamo, rule, Side::right);
  const std::size_t dg = left_dynamo.count();
  const std::size_t dh = right_dynamo.count();
  return certify(cartesian_product(left, right), rule, cross_union(left, left_dynamo, right, right_dynamo),
                 dg * right.order() + dh * left.order() - dg * dh, Construction::cartesian_dynamo);
}

BoundReport cartesian_dynamo_witness_reduced(const Graph& left, const VertexSet& left_dynamo,
                                             const Graph& right, const VertexSet& right_dynamo) {
  const Rule rule = Rule::majority();
  require_no_isolated(left, Side::left);
  require_no_isolated(right, Side::right);
  require_converting(left, left_dynamo, rule, Side::left);
  require_converting(right, right_dynamo, rule, Side::right);
  if (!is_minimal(left, rule, left_dynamo)) {
    throw Error(ErrorCode::precondition_violated, "left factor dynamo is not minimal");
  }
  if (!is_minimal(right, rule, right_dynamo)) {
    throw Error(ErrorCode::precondition_violated, "right factor dynamo is not minimal");
  }
  const std::size_t dg = left_dynamo.count();
  const std::size_t dh = right_dynamo.count();
  VertexSet witness = cross_union(left, left_dynamo, right, right_dynamo) - product_set(left_dynamo, right_dynamo);
  return certify(cartesian_product(left, right), rule, std::move(witness),
                 dg * right.order() + dh * left.order() - 2 * dg * dh, Construction::cartesian_dynamo_reduced);
}

BoundReport tensor_k_witness(const Graph& left, const VertexSet& left_set, const Graph& right,
                             const VertexSet& right_set, std::size_t k) {
  return tensor_side_witness(left, left_set, right, right_set, Rule::k_threshold(k),
                             Construction::tensor_k_threshold);
}

BoundReport tensor_dynamo_witness(const Graph& left, const VertexSet& left_dynamo, const Graph& right,
                                  const VertexSet& right_dynamo) {
  return tensor_side_witness(left, left_dynamo, right, right_dynamo, Rule::majority(),
                             Construction::tensor_dynamo);
}

VertexSet minimum_factor_witness(const Graph& graph, const Rule& rule) {
  return minimum_conversion_set(graph, rule).witness;
}

std::size_t tensor_isolated_count(const Graph& left, const Graph& right) {
  const std::size_t ig = analyze(left).isolated.count();
  const std::size_t ih = analyze(right).isolated.count();
  return ig * right.order() + ih * left.order() - ig * ih;
}

BoundReport tensor_general(const Graph& left, const Graph& right, const Rule& rule,
                           const FactorWitnessProvider& provider) {
  const Construction construction =
      rule.is_majority() ? Construction::tensor_dynamo : Construction::tensor_k_threshold;
  const VertexSet left_core = analyze(left).isolated.complement();
  const VertexSet right_core = analyze(right).isolated.complement();
  const std::size_t nr = right.order();

  VertexSet witness(left.order() * nr);
  std::size_t core_bound = 0;
  if (!left_core.empty() && !right_core.empty()) {
    const Graph g = left.induced(left_core);
    const Graph h = right.induced(right_core);
    const BoundReport core = tensor_side_witness(g, provider(g, rule), h, provider(h, rule), rule, construction);
    core_bound = core.bound;
    const auto left_ids = left_core.to_vector();
    const auto right_ids = right_core.to_vector();
    core.witness.for_each([&](Vertex id) {
      const auto pv = ProductVertex::unflatten(id, h.order());
      witness.insert(ProductVertex{left_ids[pv.g], right_ids[pv.h]}.flatten(nr));
    });
  }
  const Graph product = tensor_product(left, right);
  const VertexSet isolated = analyze(product).isolated;
  witness |= isolated;
  BoundReport report = certify(product, rule, std::move(witness), core_bound + tensor_isolated_count(left, right),
                               construction);
  report.isolated = isolated.count();
  return report;
}

}  // namespace spreadlab
