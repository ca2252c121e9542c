#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylowlab/lattice.hpp"
#include "sylowlab/subgroup.hpp"

namespace sylowlab {

/// Sylow p-subgroup grown one p-element of the current normalizer at a time,
/// scanning elements in index order. Trivial when p does not divide the order.
Subgroup sylow_subgroup(const Subgroup& ambient, std::uint64_t p);

/// Subgroup generated by the elements x with x^(p^i) = 1.
/// Throws std::invalid_argument unless `p_group` is a p-group.
Subgroup omega(const Subgroup& p_group, std::uint64_t p, unsigned i);
/// Omega_1 for odd p, Omega_2 for p = 2.
Subgroup omega_star(const Subgroup& p_group, std::uint64_t p);

enum class FactorKind { PGroup, PPrimeGroup, Mixed };

struct ChiefFactor {
  std::uint64_t order;
  FactorKind kind;
};

/// Ascending chain 1 = terms[0] < ... < terms.back() = G of normal subgroups
/// with chief factors between consecutive terms.
struct ChiefSeries {
  std::uint64_t prime;
  std::vector<Subgroup> terms;
  std::vector<ChiefFactor> factors;
};

/// Each step takes the canonically first normal subgroup strictly above the
/// current term; such a subgroup is minimal over it, so the factor is chief.
ChiefSeries chief_series(const Subgroup& ambient, std::uint64_t p);
/// Chief factors of ambient/bottom (bottom normal in ambient).
ChiefSeries chief_series_above(const Subgroup& ambient, const Subgroup& bottom, std::uint64_t p);

FactorKind factor_kind(std::uint64_t order, std::uint64_t p);

bool is_p_solvable(const Subgroup& ambient, std::uint64_t p);
bool is_p_supersolvable(const Subgroup& ambient, std::uint64_t p);
bool is_nilpotent(const Subgroup& ambient);
/// Generated subgroup of all p'-elements has order prime to p.
bool is_p_nilpotent(const Subgroup& ambient, std::uint64_t p);
bool is_solvable(const Subgroup& ambient);

enum class Formation { Nilpotent, PNilpotent, PSupersolvable };

struct FormationTag {
  Formation kind;
  std::uint64_t p = 0;  // required for PNilpotent and PSupersolvable

  static FormationTag nilpotent() { return {Formation::Nilpotent, 0}; }
  static FormationTag p_nilpotent(std::uint64_t p) { return {Formation::PNilpotent, p}; }
  static FormationTag p_supersolvable(std::uint64_t p) { return {Formation::PSupersolvable, p}; }
  std::string name() const;
};

/// Whether ambient/n lies in the formation, decided on the normal-subgroup
/// lattice of `ambient` (normal subgroups of the quotient are the normal
/// subgroups of ambient above n).
bool quotient_in_formation(const Subgroup& ambient, const Subgroup& n, FormationTag f);

/// Intersection of all normal subgroups whose quotient lies in the formation.
Subgroup residual(const Subgroup& ambient, FormationTag f);

/// Largest normal subgroup of order prime to p.
Subgroup p_prime_core(const Subgroup& ambient, std::uint64_t p);

/// |G| = 8, non-abelian, exactly one involution.
bool is_quaternion8(const Subgroup& g);
/// Same test for the section h/k (k normal in h), without building the quotient.
bool section_is_quaternion8(const Subgroup& h, const Subgroup& k);

enum class SectionScan {
  /// Only 2-generated non-abelian H, and only K not containing H'.
  Pruned,
  /// Every H with |H| >= 8 and every normal K of index 8 in H.
  Exhaustive,
};

struct QuaternionFreeResult {
  bool quaternion_free = true;
  /// Set when the input was not a 2-group (the answer is then vacuously true).
  bool not_a_2_group = false;
  std::optional<std::pair<Subgroup, Subgroup>> q8_section;
};

QuaternionFreeResult quaternion_free_scan(const Subgroup& p_group, SectionScan scan = SectionScan::Pruned);
bool is_quaternion_free(const Subgroup& p_group);

/// Not p-supersolvable, while every maximal subgroup is.
bool is_minimal_non_p_supersolvable(const Subgroup& ambient, std::uint64_t p);

}  // namespace sylowlab
