#include "sylowlab/lattice.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sylowlab {

namespace {

// LRU cache of per-ambient subgroup lists (lattices and normal-subgroup lists),
// bounded by the total number of stored subgroups. Values are computed outside
// the lock; a racing insert of the same key just replaces an identical value.
class StructureCache {
 public:
  struct Key {
    std::uint64_t token;
    std::size_t hash;
    int kind;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.hash ^ (k.token * 0x9e3779b97f4a7c15ULL) ^ k.kind; }
  };

  std::shared_ptr<const void> find(const Subgroup& ambient, int kind) {
    std::lock_guard lock(mu_);
    auto it = map_.find(key_of(ambient, kind));
    if (it == map_.end() || !(it->second.ambient == ambient)) {
      ++misses_;
      return nullptr;
    }
    ++hits_;
    lru_.splice(lru_.begin(), lru_, it->second.pos);
    return it->second.value;
  }

  void insert(const Subgroup& ambient, int kind, std::shared_ptr<const void> value, std::size_t cost) {
    std::lock_guard lock(mu_);
    Key k = key_of(ambient, kind);
    if (auto it = map_.find(k); it != map_.end()) {
      stored_ -= it->second.cost;
      lru_.erase(it->second.pos);
      map_.erase(it);
    }
    lru_.push_front(k);
    map_.emplace(k, Entry{ambient, std::move(value), cost, lru_.begin()});
    stored_ += cost;
    while (stored_ > capacity_ && map_.size() > 1) {
      auto victim = map_.find(lru_.back());
      stored_ -= victim->second.cost;
      map_.erase(victim);
      lru_.pop_back();
    }
  }

  CacheStats stats() {
    std::lock_guard lock(mu_);
    return {map_.size(), stored_, hits_, misses_};
  }
  void clear() {
    std::lock_guard lock(mu_);
    map_.clear();
    lru_.clear();
    stored_ = hits_ = misses_ = 0;
  }
  void set_capacity(std::size_t c) {
    std::lock_guard lock(mu_);
    capacity_ = c;
  }

 private:
  struct Entry {
    Subgroup ambient;
    std::shared_ptr<const void> value;
    std::size_t cost;
    std::list<Key>::iterator pos;
  };
  static Key key_of(const Subgroup& a, int kind) { return {a.parent().token(), a.key(), kind}; }

  std::mutex mu_;
  std::unordered_map<Key, Entry, KeyHash> map_;
  std::list<Key> lru_;
  std::size_t stored_ = 0;
  std::size_t capacity_ = 400'000;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

StructureCache& cache() {
  static StructureCache c;
  return c;
}

constexpr int kLattice = 0;
constexpr int kNormals = 1;

// Closure of `seeds` under pairwise join with `atoms`, deduplicated.
std::vector<Subgroup> join_closure(std::vector<Subgroup> seeds, const std::vector<Subgroup>& atoms,
                                   std::size_t cap, bool& complete) {
  std::unordered_set<Subgroup, SubgroupHash> seen(seeds.begin(), seeds.end());
  std::vector<Subgroup> list = std::move(seeds);
  complete = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const Subgroup& atom : atoms) {
      if (atom.is_subgroup_of(list[i])) continue;
      Subgroup j = join(list[i], atom);
      if (seen.insert(j).second) {
        list.push_back(std::move(j));
        if (list.size() >= cap) {
          complete = false;
          return list;
        }
      }
    }
  }
  return list;
}

}  // namespace

std::vector<const Subgroup*> SubgroupLattice::of_order(std::uint64_t order) const {
  std::vector<const Subgroup*> out;
  for (const auto& s : subgroups)
    if (s.order() == order) out.push_back(&s);
  return out;
}

void SubgroupLattice::require_complete() const {
  if (!complete)
    throw IncompleteLattice("subgroup lattice truncated at " + std::to_string(subgroups.size()) +
                            " subgroups (lattice cap)");
}

LatticePtr all_subgroups(const Subgroup& ambient) {
  if (auto hit = cache().find(ambient, kLattice)) return std::static_pointer_cast<const SubgroupLattice>(hit);

  const Enumeration& e = ambient.universe();
  // One cyclic subgroup per class of generators: skip powers coprime to the order.
  ElementSet done = e.empty_set();
  std::vector<Subgroup> cyclics;
  ambient.elements().for_each([&](ElementId x) {
    if (x == 0 || done.test(x)) return;
    Subgroup c = cyclic_subgroup(ambient.parent_ptr(), x);
    const std::uint64_t n = e.order_of(x);
    ElementId y = x;
    for (std::uint64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) == 1) done.set(y);
      y = e.mul(y, x);
    }
    cyclics.push_back(std::move(c));
  });
  sort_canonical(cyclics);

  std::vector<Subgroup> seeds{trivial_subgroup(ambient.parent_ptr())};
  seeds.insert(seeds.end(), cyclics.begin(), cyclics.end());
  auto lattice = std::make_shared<SubgroupLattice>();
  lattice->ambient = ambient;
  lattice->subgroups = join_closure(std::move(seeds), cyclics, limits().lattice_cap, lattice->complete);
  sort_canonical(lattice->subgroups);
  cache().insert(ambient, kLattice, lattice, lattice->subgroups.size());
  return lattice;
}

SubgroupListPtr normal_subgroups(const Subgroup& ambient) {
  if (auto hit = cache().find(ambient, kNormals))
    return std::static_pointer_cast<const std::vector<Subgroup>>(hit);

  std::vector<Subgroup> closures;
  std::unordered_set<Subgroup, SubgroupHash> seen;
  for (const auto& cls : conjugacy_classes(ambient)) {
    if (cls.front() == 0) continue;
    Subgroup n = normal_closure(ambient, std::span<const ElementId>(cls.data(), 1));
    if (seen.insert(n).second) closures.push_back(std::move(n));
  }
  sort_canonical(closures);
  std::vector<Subgroup> seeds{trivial_subgroup(ambient.parent_ptr())};
  seeds.insert(seeds.end(), closures.begin(), closures.end());
  bool complete = true;
  auto normals =
      std::make_shared<std::vector<Subgroup>>(join_closure(std::move(seeds), closures, limits().lattice_cap, complete));
  if (!complete) throw CapExceeded("normal subgroup count exceeds the lattice cap");
  sort_canonical(*normals);
  cache().insert(ambient, kNormals, normals, normals->size());
  return normals;
}

std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& ambient) {
  if (ambient.is_trivial()) throw std::invalid_argument("the trivial group has no minimal normal subgroups");
  auto normals = normal_subgroups(ambient);
  std::vector<Subgroup> out;
  for (const auto& n : *normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : out)
      if (m.is_subgroup_of(n)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(n);
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(const Subgroup& ambient) {
  auto lattice = all_subgroups(ambient);
  lattice->require_complete();
  const auto& subs = lattice->subgroups;
  std::vector<Subgroup> out;
  // Canonical order is by increasing order; scan from the top.
  for (std::size_t i = subs.size(); i-- > 0;) {
    const Subgroup& m = subs[i];
    if (m.order() == ambient.order()) continue;
    bool maximal = true;
    for (const auto& big : out)
      if (m.is_subgroup_of(big)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(m);
  }
  // Any larger proper subgroup lies in some maximal one of larger order, which
  // is already in `out`.
  sort_canonical(out);
  return out;
}

Subgroup frattini(const Subgroup& ambient) {
  auto maxes = maximal_subgroups(ambient);
  if (maxes.empty()) return ambient;
  ElementSet meet = maxes.front().elements();
  for (const auto& m : maxes) meet &= m.elements();
  return subgroup_from_set(ambient.parent_ptr(), meet);
}

Subgroup frattini_p_group(const Subgroup& p_group, std::uint64_t p) {
  if (!is_power_of(p_group.order(), p)) throw std::invalid_argument("Frattini fast path needs a p-group");
  const Enumeration& e = p_group.universe();
  std::vector<ElementId> powers;
  p_group.elements().for_each([&](ElementId x) {
    ElementId y = e.pow(x, p);
    if (y != 0) powers.push_back(y);
  });
  Subgroup result = derived_subgroup(p_group);
  for (ElementId y : powers) result = extend(result, y);
  return result;
}

std::vector<Subgroup> subgroups_of_index(const Subgroup& ambient, std::uint64_t index) {
  if (index == 0 || ambient.order() % index) return {};
  auto lattice = all_subgroups(ambient);
  lattice->require_complete();
  std::vector<Subgroup> out;
  for (const auto* s : lattice->of_order(ambient.order() / index)) out.push_back(*s);
  return out;
}

std::vector<Subgroup> cyclic_subgroups_of_order(const Subgroup& ambient, std::uint64_t m) {
  const Enumeration& e = ambient.universe();
  ElementSet done = e.empty_set();
  std::vector<Subgroup> out;
  ambient.elements().for_each([&](ElementId x) {
    if (done.test(x) || e.order_of(x) != m) return;
    Subgroup c = cyclic_subgroup(ambient.parent_ptr(), x);
    c.elements().for_each([&](ElementId y) {
      if (e.order_of(y) == m) done.set(y);
    });
    out.push_back(std::move(c));
  });
  sort_canonical(out);
  return out;
}

CacheStats structure_cache_stats() { return cache().stats(); }
void clear_structure_caches() { cache().clear(); }
void set_structure_cache_capacity(std::size_t stored_subgroups) { cache().set_capacity(stored_subgroups); }

}  // namespace sylowlab
