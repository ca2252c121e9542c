#include "sylowlab/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sylowlab {

Subgroup::Subgroup(GroupPtr parent, ElementSet elements, std::vector<ElementId> generators)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      order_(elements_.count()),
      hash_(elements_.hash()) {}

std::vector<Permutation> Subgroup::generator_perms() const {
  std::vector<Permutation> out;
  for (ElementId g : generators_) out.push_back(universe().element(g));
  return out;
}

bool Subgroup::contains(const Permutation& g) const {
  auto idx = universe().index_of(g);
  return idx && elements_.test(*idx);
}

void sort_canonical(std::vector<Subgroup>& subgroups) {
  std::sort(subgroups.begin(), subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.canonical_less(b); });
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  ElementSet s = g->enumeration().empty_set();
  s.set(0);
  return Subgroup(g, std::move(s), {});
}

Subgroup whole_group(const GroupPtr& g) {
  const auto& e = g->enumeration();
  ElementSet s = e.empty_set();
  for (ElementId i = 0; i < e.size(); ++i) s.set(i);
  std::vector<ElementId> gens;
  for (const auto& p : g->generators())
    if (!p.is_identity()) gens.push_back(*e.index_of(p));
  return Subgroup(g, std::move(s), std::move(gens));
}

Subgroup extend(const Subgroup& h, ElementId x) {
  if (h.contains(x)) return h;
  const Enumeration& e = h.universe();
  std::vector<ElementId> gens = h.generators();
  gens.push_back(x);
  ElementSet set = h.elements();
  const std::vector<ElementId> base = h.element_list();
  std::vector<ElementId> reps{0};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (ElementId s : gens) {
      ElementId y = e.mul(reps[k], s);
      if (set.test(y)) continue;
      reps.push_back(y);
      for (ElementId a : base) set.set(e.mul(a, y));
    }
  }
  return Subgroup(h.parent_ptr(), std::move(set), std::move(gens));
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementId> gens) {
  Subgroup h = trivial_subgroup(g);
  for (ElementId x : gens) h = extend(h, x);
  return h;
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Permutation> gens) {
  const auto& e = g->enumeration();
  std::vector<ElementId> ids;
  for (const auto& p : gens) {
    if (p.degree() != g->degree()) throw std::invalid_argument("degree mismatch");
    auto idx = e.index_of(p);
    if (!idx) throw std::invalid_argument("element " + p.to_cycle_string() + " is not in the parent group");
    ids.push_back(*idx);
  }
  return subgroup_generated(g, ids);
}

Subgroup cyclic_subgroup(const GroupPtr& g, ElementId x) {
  const auto& e = g->enumeration();
  ElementSet s = e.empty_set();
  ElementId y = 0;
  do {
    s.set(y);
    y = e.mul(y, x);
  } while (y != 0);
  std::vector<ElementId> gens;
  if (x != 0) gens.push_back(x);
  return Subgroup(g, std::move(s), std::move(gens));
}

Subgroup subgroup_from_set(const GroupPtr& g, const ElementSet& set) {
  Subgroup h = trivial_subgroup(g);
  // Prefer high-order elements so few generators are needed.
  std::vector<ElementId> members = set.to_vector();
  const auto& e = g->enumeration();
  std::stable_sort(members.begin(), members.end(),
                   [&](ElementId a, ElementId b) { return e.order_of(a) > e.order_of(b); });
  for (ElementId x : members) {
    if (h.order() == members.size()) break;
    if (!h.contains(x)) h = extend(h, x);
  }
  return h;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  Subgroup h = a;
  for (ElementId x : b.generators()) h = extend(h, x);
  return h;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  return subgroup_from_set(a.parent_ptr(), a.elements() & b.elements());
}

Subgroup normal_closure(const Subgroup& ambient, std::span<const ElementId> s) {
  for (ElementId x : s)
    if (!ambient.contains(x)) throw std::invalid_argument("element outside the ambient group");
  const Enumeration& e = ambient.universe();
  Subgroup n = subgroup_generated(ambient.parent_ptr(), s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n.generators().size(); ++i) {
      for (ElementId a : ambient.generators()) {
        ElementId c = e.conj(n.generators()[i], a);
        if (!n.contains(c)) {
          n = extend(n, c);
          changed = true;
        }
      }
    }
  }
  return n;
}

Subgroup derived_subgroup(const Subgroup& ambient) {
  const Enumeration& e = ambient.universe();
  std::vector<ElementId> comms;
  const auto& gens = ambient.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ElementId c = e.mul(e.mul(e.inv(gens[i]), e.inv(gens[j])), e.mul(gens[i], gens[j]));
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(ambient, comms);
}

Subgroup commutator_with(const Subgroup& x, const Subgroup& ambient) {
  const Enumeration& e = ambient.universe();
  std::vector<ElementId> comms;
  for (ElementId a : x.generators())
    for (ElementId b : ambient.generators()) {
      ElementId c = e.mul(e.mul(e.inv(a), e.inv(b)), e.mul(a, b));
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(ambient, comms);
}

Subgroup centralizer(const Subgroup& ambient, std::span<const ElementId> s) {
  const Enumeration& e = ambient.universe();
  ElementSet set = e.empty_set();
  ambient.elements().for_each([&](ElementId a) {
    for (ElementId x : s)
      if (e.mul(a, x) != e.mul(x, a)) return;
    set.set(a);
  });
  return subgroup_from_set(ambient.parent_ptr(), set);
}

Subgroup center(const Subgroup& ambient) { return centralizer(ambient, ambient.generators()); }

Subgroup normalizer(const Subgroup& ambient, const Subgroup& h) {
  const Enumeration& e = ambient.universe();
  ElementSet set = e.empty_set();
  ambient.elements().for_each([&](ElementId a) {
    if (h.contains(a)) {
      set.set(a);
      return;
    }
    for (ElementId x : h.generators())
      if (!h.contains(e.conj(x, a))) return;
    set.set(a);
  });
  return subgroup_from_set(ambient.parent_ptr(), set);
}

Subgroup conjugate_subgroup(const Subgroup& h, ElementId x) {
  const Enumeration& e = h.universe();
  ElementSet set = e.empty_set();
  h.elements().for_each([&](ElementId a) { set.set(e.conj(a, x)); });
  std::vector<ElementId> gens;
  for (ElementId g : h.generators()) gens.push_back(e.conj(g, x));
  return Subgroup(h.parent_ptr(), std::move(set), std::move(gens));
}

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& x) {
  auto idx = h.universe().index_of(x);
  if (!idx) throw std::invalid_argument("conjugating element is not in the parent group");
  return conjugate_subgroup(h, *idx);
}

bool is_normal_in(const Subgroup& h, const Subgroup& ambient) {
  if (!h.is_subgroup_of(ambient)) return false;
  const Enumeration& e = h.universe();
  for (ElementId a : ambient.generators())
    for (ElementId x : h.generators())
      if (!h.contains(e.conj(x, a))) return false;
  return true;
}

bool is_abelian(const Subgroup& a) {
  const Enumeration& e = a.universe();
  const auto& g = a.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (e.mul(g[i], g[j]) != e.mul(g[j], g[i])) return false;
  return true;
}

std::uint64_t exponent(const Subgroup& a) {
  const Enumeration& e = a.universe();
  std::uint64_t exp = 1;
  a.elements().for_each([&](ElementId x) { exp = std::lcm(exp, e.order_of(x)); });
  return exp;
}

std::vector<std::vector<ElementId>> conjugacy_classes(const Subgroup& ambient) {
  const Enumeration& e = ambient.universe();
  ElementSet seen = e.empty_set();
  std::vector<std::vector<ElementId>> classes;
  ambient.elements().for_each([&](ElementId x) {
    if (seen.test(x)) return;
    std::vector<ElementId> orbit{x};
    seen.set(x);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (ElementId a : ambient.generators()) {
        ElementId y = e.conj(orbit[k], a);
        if (!seen.test(y)) {
          seen.set(y);
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  });
  return classes;
}

std::vector<ElementId> right_transversal(const Subgroup& ambient, const Subgroup& h) {
  if (!h.is_subgroup_of(ambient)) throw std::invalid_argument("transversal of a non-subgroup");
  const Enumeration& e = ambient.universe();
  ElementSet covered = e.empty_set();
  const auto hs = h.element_list();
  std::vector<ElementId> reps;
  ambient.elements().for_each([&](ElementId x) {
    if (covered.test(x)) return;
    reps.push_back(x);
    for (ElementId a : hs) covered.set(e.mul(a, x));
  });
  return reps;
}

bool product_is(const Subgroup& h, const Subgroup& b, const Subgroup& ambient) {
  auto meet = h.elements().intersection_count(b.elements());
  return h.order() * b.order() == ambient.order() * meet;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

}  // namespace sylowlab
