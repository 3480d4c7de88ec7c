#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace spreadlab {

using Vertex = std::uint32_t;

/// Subset of the vertex universe [0, universe) stored as a dense bit vector.
/// Binary set operations require both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Low `universe` bits of `mask`; universe must be at most 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  bool is_full() const noexcept { return count() == universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// Members in increasing order.
  std::vector<Vertex> to_vector() const;
  std::uint64_t to_mask() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic comparison of the sorted member tuples.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

}  // namespace spreadlab
