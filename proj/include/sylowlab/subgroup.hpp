#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sylowlab/element_set.hpp"
#include "sylowlab/perm_group.hpp"

namespace sylowlab {

/// A subgroup of a fixed enumerated parent group, stored as the set of its
/// element indices plus a (small) generating set. Equality is by element set,
/// so two refs built from different generators compare equal.
class Subgroup {
 public:
  Subgroup() = default;
  /// `elements` must be closed under multiplication and generated by `generators`.
  Subgroup(GroupPtr parent, ElementSet elements, std::vector<ElementId> generators);

  const PermGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const Enumeration& universe() const { return parent_->enumeration(); }

  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  const ElementSet& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  std::vector<Permutation> generator_perms() const;
  std::vector<ElementId> element_list() const { return elements_.to_vector(); }

  bool contains(ElementId g) const { return elements_.test(g); }
  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const Subgroup& other) const { return elements_.is_subset_of(other.elements_); }

  std::size_t key() const { return hash_; }
  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && hash_ == other.hash_ && elements_ == other.elements_;
  }
  /// Canonical order: by order, then lexicographically by sorted element indices.
  bool canonical_less(const Subgroup& other) const {
    if (order_ != other.order_) return order_ < other.order_;
    return elements_.lex_less(other.elements_);
  }

 private:
  GroupPtr parent_;
  ElementSet elements_;
  std::vector<ElementId> generators_;
  std::uint64_t order_ = 0;
  std::size_t hash_ = 0;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return s.key(); }
};

void sort_canonical(std::vector<Subgroup>& subgroups);

// --- construction ----------------------------------------------------------

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
/// Throws std::invalid_argument if some element lies outside the parent.
Subgroup subgroup_generated(const GroupPtr& g, std::span<const Permutation> gens);
Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementId> gens);
Subgroup cyclic_subgroup(const GroupPtr& g, ElementId x);
/// `set` must already be a subgroup; a generating set is chosen greedily.
Subgroup subgroup_from_set(const GroupPtr& g, const ElementSet& set);

/// <h, x> by adding one right coset of h at a time (Dimino).
Subgroup extend(const Subgroup& h, ElementId x);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

// --- elementary operators, all inside an ambient subgroup ------------------

/// Smallest normal subgroup of `ambient` containing `s`.
Subgroup normal_closure(const Subgroup& ambient, std::span<const ElementId> s);
Subgroup derived_subgroup(const Subgroup& ambient);
/// [x, ambient] for x normal in ambient.
Subgroup commutator_with(const Subgroup& x, const Subgroup& ambient);
Subgroup center(const Subgroup& ambient);
Subgroup centralizer(const Subgroup& ambient, std::span<const ElementId> s);
Subgroup normalizer(const Subgroup& ambient, const Subgroup& h);
/// h^x = x^-1 h x
Subgroup conjugate_subgroup(const Subgroup& h, ElementId x);
Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& x);
bool is_normal_in(const Subgroup& h, const Subgroup& ambient);
bool is_abelian(const Subgroup& a);
std::uint64_t exponent(const Subgroup& a);

/// Orbits of `ambient` acting on itself by conjugation, each sorted, listed by
/// smallest member.
std::vector<std::vector<ElementId>> conjugacy_classes(const Subgroup& ambient);
/// One representative per right coset h*x of h in ambient; the first is the identity.
std::vector<ElementId> right_transversal(const Subgroup& ambient, const Subgroup& h);

/// |hb| = |h||b| / |h ∩ b|, so hb = ambient iff the orders match.
bool product_is(const Subgroup& h, const Subgroup& b, const Subgroup& ambient);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace sylowlab
