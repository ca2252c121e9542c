#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sylowlab/subgroup.hpp"

namespace sylowlab {

/// Every subgroup of `ambient`, deduplicated by element set, in canonical
/// order (trivial subgroup first, ambient last). `complete` is false when
/// limits().lattice_cap stopped the closure early.
struct SubgroupLattice {
  Subgroup ambient;
  std::vector<Subgroup> subgroups;
  bool complete = true;

  std::vector<const Subgroup*> of_order(std::uint64_t order) const;
  /// Throws IncompleteLattice when `complete` is false.
  void require_complete() const;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;
using SubgroupListPtr = std::shared_ptr<const std::vector<Subgroup>>;

/// Cyclic subgroups first, then joins with cyclic subgroups to a fixpoint.
/// Results are cached per ambient subgroup.
LatticePtr all_subgroups(const Subgroup& ambient);

/// Normal subgroups in canonical order, found independently of the full
/// lattice: normal closures of conjugacy classes and their joins. Cached.
SubgroupListPtr normal_subgroups(const Subgroup& ambient);

/// Minimal nontrivial normal subgroups. Throws std::invalid_argument on the trivial group.
std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& ambient);

/// Maximal proper subgroups; needs a complete lattice.
std::vector<Subgroup> maximal_subgroups(const Subgroup& ambient);

/// Intersection of the maximal subgroups (general path, needs a complete lattice).
Subgroup frattini(const Subgroup& ambient);
/// P' P^p for a p-group P.
Subgroup frattini_p_group(const Subgroup& p_group, std::uint64_t p);

std::vector<Subgroup> subgroups_of_index(const Subgroup& ambient, std::uint64_t index);
/// Built straight from the elements of order m; no lattice needed.
std::vector<Subgroup> cyclic_subgroups_of_order(const Subgroup& ambient, std::uint64_t m);

struct CacheStats {
  std::size_t entries = 0;
  std::size_t stored_subgroups = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
};

CacheStats structure_cache_stats();
void clear_structure_caches();
/// Upper bound on the number of subgroups kept across all cached lists.
void set_structure_cache_capacity(std::size_t stored_subgroups);

}  // namespace sylowlab
