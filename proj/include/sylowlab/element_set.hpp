#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sylowlab {

/// Index of an element inside an enumerated group (position in its sorted
/// element list). The identity always has index 0.
using ElementId = std::uint32_t;

/// Fixed-size bitset over the elements of one enumerated group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }

  bool test(ElementId i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(ElementId i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(ElementId i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  std::size_t intersection_count(const ElementSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool operator==(const ElementSet& other) const = default;

  /// Lexicographic order of the sorted member lists, valid for sets of equal
  /// cardinality: the set owning the lowest differing element sorts first.
  bool lex_less(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff) return (words_[i] & (diff & -diff)) != 0;
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }

  /// Calls fn(id) for every member in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        auto bit = static_cast<unsigned>(std::countr_zero(bits));
        fn(static_cast<ElementId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<ElementId> to_vector() const {
    std::vector<ElementId> out;
    out.reserve(count());
    for_each([&](ElementId i) { out.push_back(i); });
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace sylowlab
