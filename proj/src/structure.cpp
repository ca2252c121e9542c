#include "sylowlab/structure.hpp"

#include <numeric>
#include <stdexcept>

namespace sylowlab {

Subgroup sylow_subgroup(const Subgroup& ambient, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup needs a prime");
  const std::uint64_t target = p_part(ambient.order(), p);
  const Enumeration& e = ambient.universe();
  Subgroup q = trivial_subgroup(ambient.parent_ptr());
  while (q.order() < target) {
    // A p-subgroup below Sylow order is properly contained in its normalizer
    // inside some Sylow subgroup, so a p-element of N(q) \ q exists; q is
    // normal in N(q), hence <q, g> = q<g> is again a p-group.
    Subgroup n = normalizer(ambient, q);
    std::optional<ElementId> pick;
    n.elements().for_each([&](ElementId g) {
      if (!pick && !q.contains(g) && is_power_of(e.order_of(g), p)) pick = g;
    });
    if (!pick) throw std::logic_error("Sylow growth found no p-element in the normalizer");
    q = extend(q, *pick);
  }
  return q;
}

Subgroup omega(const Subgroup& p_group, std::uint64_t p, unsigned i) {
  if (!is_power_of(p_group.order(), p)) throw std::invalid_argument("omega needs a p-group");
  std::uint64_t bound = 1;
  for (unsigned k = 0; k < i; ++k) bound *= p;
  const Enumeration& e = p_group.universe();
  Subgroup out = trivial_subgroup(p_group.parent_ptr());
  p_group.elements().for_each([&](ElementId x) {
    if (bound % e.order_of(x) == 0 && !out.contains(x)) out = extend(out, x);
  });
  return out;
}

Subgroup omega_star(const Subgroup& p_group, std::uint64_t p) { return omega(p_group, p, p == 2 ? 2 : 1); }

FactorKind factor_kind(std::uint64_t order, std::uint64_t p) {
  if (is_power_of(order, p)) return FactorKind::PGroup;
  if (order % p != 0) return FactorKind::PPrimeGroup;
  return FactorKind::Mixed;
}

ChiefSeries chief_series_above(const Subgroup& ambient, const Subgroup& bottom, std::uint64_t p) {
  auto normals = normal_subgroups(ambient);
  ChiefSeries series{p, {bottom}, {}};
  Subgroup current = bottom;
  while (current.order() < ambient.order()) {
    const Subgroup* next = nullptr;
    for (const auto& n : *normals) {
      if (n.order() > current.order() && current.is_subgroup_of(n)) {
        next = &n;
        break;
      }
    }
    if (!next) throw std::logic_error("normal subgroup list misses the ambient group");
    std::uint64_t order = next->order() / current.order();
    series.factors.push_back({order, factor_kind(order, p)});
    series.terms.push_back(*next);
    current = *next;
  }
  return series;
}

ChiefSeries chief_series(const Subgroup& ambient, std::uint64_t p) {
  return chief_series_above(ambient, trivial_subgroup(ambient.parent_ptr()), p);
}

bool is_p_solvable(const Subgroup& ambient, std::uint64_t p) {
  for (const auto& f : chief_series(ambient, p).factors)
    if (f.kind == FactorKind::Mixed) return false;
  return true;
}

bool is_p_supersolvable(const Subgroup& ambient, std::uint64_t p) {
  return quotient_in_formation(ambient, trivial_subgroup(ambient.parent_ptr()), FormationTag::p_supersolvable(p));
}

bool is_nilpotent(const Subgroup& ambient) {
  for (auto q : prime_divisors(ambient.order()))
    if (!is_normal_in(sylow_subgroup(ambient, q), ambient)) return false;
  return true;
}

bool is_p_nilpotent(const Subgroup& ambient, std::uint64_t p) {
  const Enumeration& e = ambient.universe();
  Subgroup t = trivial_subgroup(ambient.parent_ptr());
  bool ok = true;
  ambient.elements().for_each([&](ElementId x) {
    if (!ok || e.order_of(x) % p == 0 || t.contains(x)) return;
    t = extend(t, x);
    if (t.order() % p == 0) ok = false;
  });
  return ok;
}

bool is_solvable(const Subgroup& ambient) {
  Subgroup current = ambient;
  while (!current.is_trivial()) {
    Subgroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = next;
  }
  return true;
}

std::string FormationTag::name() const {
  switch (kind) {
    case Formation::Nilpotent: return "N";
    case Formation::PNilpotent: return "N_" + std::to_string(p);
    case Formation::PSupersolvable: return "U_" + std::to_string(p);
  }
  return "?";
}

namespace {

bool has_normal_of_order_above(const std::vector<Subgroup>& normals, const Subgroup& n, std::uint64_t order) {
  for (const auto& m : normals)
    if (m.order() == order && n.is_subgroup_of(m)) return true;
  return false;
}

}  // namespace

bool quotient_in_formation(const Subgroup& ambient, const Subgroup& n, FormationTag f) {
  const std::uint64_t q = ambient.order() / n.order();
  switch (f.kind) {
    case Formation::PSupersolvable: {
      for (const auto& factor : chief_series_above(ambient, n, f.p).factors)
        if (factor.kind == FactorKind::Mixed || (factor.kind == FactorKind::PGroup && factor.order != f.p))
          return false;
      return true;
    }
    case Formation::PNilpotent: {
      const std::uint64_t complement = q / p_part(q, f.p);
      return has_normal_of_order_above(*normal_subgroups(ambient), n, n.order() * complement);
    }
    case Formation::Nilpotent: {
      auto normals = normal_subgroups(ambient);
      for (auto r : prime_divisors(q))
        if (!has_normal_of_order_above(*normals, n, n.order() * p_part(q, r))) return false;
      return true;
    }
  }
  return false;
}

Subgroup residual(const Subgroup& ambient, FormationTag f) {
  if (f.kind != Formation::Nilpotent && !is_prime(f.p)) throw std::invalid_argument("formation needs a prime");
  auto normals = normal_subgroups(ambient);
  ElementSet meet = ambient.elements();
  for (const auto& n : *normals)
    if (quotient_in_formation(ambient, n, f)) meet &= n.elements();
  return subgroup_from_set(ambient.parent_ptr(), meet);
}

Subgroup p_prime_core(const Subgroup& ambient, std::uint64_t p) {
  auto normals = normal_subgroups(ambient);
  Subgroup core = trivial_subgroup(ambient.parent_ptr());
  for (const auto& n : *normals)
    if (n.order() % p != 0) core = join(core, n);
  return core;
}

bool is_quaternion8(const Subgroup& g) {
  if (g.order() != 8 || is_abelian(g)) return false;
  const Enumeration& e = g.universe();
  int involutions = 0;
  g.elements().for_each([&](ElementId x) {
    if (e.order_of(x) == 2) ++involutions;
  });
  return involutions == 1;
}

bool section_is_quaternion8(const Subgroup& h, const Subgroup& k) {
  if (h.order() != 8 * k.order() || !k.is_subgroup_of(h)) return false;
  const Enumeration& e = h.universe();
  const auto& gens = h.generators();
  bool non_abelian = false;
  for (std::size_t i = 0; i < gens.size() && !non_abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && !non_abelian; ++j) {
      ElementId c = e.mul(e.mul(e.inv(gens[i]), e.inv(gens[j])), e.mul(gens[i], gens[j]));
      if (!k.contains(c)) non_abelian = true;
    }
  if (!non_abelian) return false;
  // Each involution of h/k is a coset of |k| elements x outside k with x^2 in k.
  std::uint64_t count = 0;
  h.elements().for_each([&](ElementId x) {
    if (!k.contains(x) && k.contains(e.mul(x, x))) ++count;
  });
  return count == k.order();
}

QuaternionFreeResult quaternion_free_scan(const Subgroup& p_group, SectionScan scan) {
  QuaternionFreeResult result;
  if (!is_power_of(p_group.order(), 2)) {
    result.not_a_2_group = true;
    return result;
  }
  if (p_group.order() < 8) return result;
  const bool pruned = scan == SectionScan::Pruned;
  if (pruned && is_abelian(p_group)) return result;

  auto lattice = all_subgroups(p_group);
  lattice->require_complete();
  const auto& subs = lattice->subgroups;
  const Enumeration& e = p_group.universe();
  for (const auto& h : subs) {
    if (h.order() < 8) continue;
    std::optional<Subgroup> h_derived;
    if (pruned) {
      // A Q8 section h/k has a 2-generated preimage <a, b>, so it suffices
      // to look at h with |h : Phi(h)| = 4.
      if (is_abelian(h)) continue;
      if (h.order() / frattini_p_group(h, 2).order() != 4) continue;
      h_derived = derived_subgroup(h);
    }
    for (const auto& k : subs) {
      if (k.order() * 8 != h.order() || !k.is_subgroup_of(h)) continue;
      if (h_derived && h_derived->is_subgroup_of(k)) continue;
      bool normal = true;
      for (ElementId a : h.generators()) {
        for (ElementId x : k.generators())
          if (!k.contains(e.conj(x, a))) {
            normal = false;
            break;
          }
        if (!normal) break;
      }
      if (normal && section_is_quaternion8(h, k)) {
        result.quaternion_free = false;
        result.q8_section = std::make_pair(h, k);
        return result;
      }
    }
  }
  return result;
}

bool is_quaternion_free(const Subgroup& p_group) { return quaternion_free_scan(p_group).quaternion_free; }

bool is_minimal_non_p_supersolvable(const Subgroup& ambient, std::uint64_t p) {
  if (is_p_supersolvable(ambient, p)) return false;
  for (const auto& m : maximal_subgroups(ambient))
    if (!is_p_supersolvable(m, p)) return false;
  return true;
}

}  // namespace sylowlab
