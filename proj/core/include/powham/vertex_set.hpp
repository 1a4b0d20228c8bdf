#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace powham {

using Vertex = int;
using Word = std::uint64_t;

inline constexpr int kWordBits = 64;
/// Largest vertex count any Digraph may have.
inline constexpr int kVertexCap = 4096;

inline constexpr std::size_t words_for(int n) {
  return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits);
}

/// Fixed-universe bitset over [0, universe). Set operations require equal
/// universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Word> words);

  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >>
            (static_cast<unsigned>(v) % kWordBits)) & 1u;
  }
  void insert(Vertex v) {
    words_[static_cast<std::size_t>(v) / kWordBits] |=
        Word{1} << (static_cast<unsigned>(v) % kWordBits);
  }
  void erase(Vertex v) {
    words_[static_cast<std::size_t>(v) / kWordBits] &=
        ~(Word{1} << (static_cast<unsigned>(v) % kWordBits));
  }

  int size() const noexcept;
  bool empty() const noexcept;
  /// Smallest member, or -1 when empty.
  Vertex first() const noexcept;
  std::vector<Vertex> members() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        fn(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b)));
      }
    }
  }

 private:
  void clear_tail() noexcept;

  int universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace powham
