#include "spreadlab/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_graph: return "invalid_graph";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::precondition_violated: return "precondition_violated";
    case ErrorCode::solver_limit_exceeded: return "solver_limit_exceeded";
    case ErrorCode::budget_exhausted: return "budget_exhausted";
    case ErrorCode::verification_failed: return "verification_failed";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw Error(ErrorCode::invalid_argument, "mask universe exceeds 64");
  VertexSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (universe > 0) s.words_[0] = mask;
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(ErrorCode::invalid_argument,
                "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::invalid_argument, "vertex sets over different universes (" +
                                                 std::to_string(universe_) + " vs " +
                                                 std::to_string(other.universe_) + ")");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw Error(ErrorCode::invalid_argument, "set universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace spreadlab
