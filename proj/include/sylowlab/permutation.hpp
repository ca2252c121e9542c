#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sylowlab {

using Point = std::uint16_t;

/// Bijection on {0, ..., n-1}. Products are read left to right:
/// (a * b)(i) = b(a(i)), so conjugation is x^-1 * h * x.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds from disjoint cycles on 0-based points, e.g. {{0, 1}, {2, 3}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation pow(long long e) const;
  /// x^-1 * this * x
  Permutation conjugate_by(const Permutation& x) const;
  /// this^-1 * rhs^-1 * this * rhs
  Permutation commutator(const Permutation& rhs) const;

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const;
  /// Smallest point not fixed, or degree() for the identity.
  std::size_t first_moved_point() const;

  /// GAP-style cycle notation with 1-based points, "()" for the identity.
  std::string to_cycle_string() const;
  /// 1-based image list, as used by the catalog file format.
  std::vector<int> one_based() const;

  std::size_t hash() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace sylowlab
