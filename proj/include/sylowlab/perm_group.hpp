#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sylowlab/element_set.hpp"
#include "sylowlab/errors.hpp"
#include "sylowlab/permutation.hpp"

namespace sylowlab {

/// Complete sorted listing of a group's elements with fast arithmetic on
/// element indices. Index 0 is the identity.
class Enumeration {
 public:
  Enumeration(std::vector<Permutation> sorted_elements, const std::vector<Permutation>& generators);

  std::size_t size() const { return elements_.size(); }
  const Permutation& element(ElementId i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<ElementId> index_of(const Permutation& g) const;
  ElementId mul(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return slow_mul(a, b);
  }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// b^-1 * a * b
  ElementId conj(ElementId a, ElementId b) const { return mul(mul(inverse_[b], a), b); }
  ElementId pow(ElementId a, std::uint64_t e) const;
  std::uint64_t order_of(ElementId a) const { return orders_[a]; }

  ElementSet empty_set() const { return ElementSet(elements_.size()); }

 private:
  ElementId slow_mul(ElementId a, ElementId b) const;

  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementId> table_;
};

/// Permutation group given by generators, with a base and strong generating
/// set built by deterministic Schreier-Sims (base points are the smallest
/// moved points). Immutable after construction except for the lazily built
/// element enumeration, which is safe to request from several threads.
class PermGroup {
 public:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;
    std::vector<int> orbit_slot;  // point -> slot in orbit/transversal, -1 if absent
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;  // transversal[k] maps base_point to orbit[k]
    std::vector<Permutation> transversal_inv;
  };

  /// Throws std::invalid_argument on degree mismatch and CapExceeded when the
  /// group order exceeds limits().bsgs_order_cap.
  static std::shared_ptr<const PermGroup> build(std::size_t degree, std::vector<Permutation> generators,
                                                std::string name = {});

  PermGroup(const PermGroup&) = delete;
  PermGroup& operator=(const PermGroup&) = delete;

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  std::uint64_t order() const { return order_; }
  /// Unique per constructed group; used as a cache key.
  std::uint64_t token() const { return token_; }

  std::vector<Point> base() const;
  const std::vector<Level>& levels() const { return levels_; }

  /// Membership by sifting through the stabilizer chain.
  bool contains(const Permutation& g) const;

  /// Full element list; throws CapExceeded above limits().enumeration_cap.
  const Enumeration& enumeration() const;
  bool enumerated() const;
  /// Equivalent to enumeration().elements().
  const std::vector<Permutation>& elements() const { return enumeration().elements(); }

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name);
  void schreier_sims();
  void rebuild_orbit(Level& level) const;
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
  std::uint64_t order_ = 1;
  std::uint64_t token_;
  std::vector<Level> levels_;

  mutable std::once_flag enum_once_;
  mutable std::unique_ptr<Enumeration> enumeration_;
  mutable std::atomic<bool> has_enumeration_{false};
};

using GroupPtr = std::shared_ptr<const PermGroup>;

}  // namespace sylowlab
