#include "sylowlab/embedding.hpp"

#include <stdexcept>

#include "sylowlab/lattice.hpp"

namespace sylowlab {

std::string to_string(EmbedMode m) {
  switch (m) {
    case EmbedMode::Central: return "central";
    case EmbedMode::Complemented: return "complemented";
    case EmbedMode::Partial: return "partial";
    case EmbedMode::None: return "none";
  }
  return "?";
}

namespace {

EmbedMode classify(const Subgroup& g, const Subgroup& h, const Subgroup& b) {
  if (b.order() == g.order()) return EmbedMode::Central;
  auto meet = h.elements().intersection_count(b.elements());
  return meet == 1 ? EmbedMode::Complemented : EmbedMode::Partial;
}

// Candidates of one order, in reverse canonical order to match the general scan.
template <class Accept>
std::optional<Subgroup> first_of_order(const SubgroupLattice& lattice, std::uint64_t order, Accept&& accept) {
  const auto& subs = lattice.subgroups;
  for (std::size_t i = subs.size(); i-- > 0;)
    if (subs[i].order() == order && accept(subs[i])) return subs[i];
  return std::nullopt;
}

CEmbedReport found(const Subgroup& g, const Subgroup& k, const Subgroup& h, const Subgroup& b) {
  return {h, k, true, b, classify(g, h, b)};
}

}  // namespace

std::optional<Subgroup> is_complemented(const Subgroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("H is not a subgroup of G");
  auto lattice = all_subgroups(g);
  lattice->require_complete();
  return first_of_order(*lattice, g.order() / h.order(), [&](const Subgroup& b) {
    return h.elements().intersection_count(b.elements()) == 1;
  });
}

CEmbedReport is_c_embedded(const Subgroup& g, const Subgroup& k, const Subgroup& h, EmbedSearch search) {
  if (!h.is_subgroup_of(k)) throw std::invalid_argument("H is not contained in K");
  if (!k.is_subgroup_of(g)) throw std::invalid_argument("K is not contained in G");
  const Subgroup zk = center(k);
  const bool central = h.is_subgroup_of(zk);

  if (search == EmbedSearch::Fast) {
    if (central) return {h, k, true, g, EmbedMode::Central};
    if (is_prime(h.order())) {
      if (auto b = is_complemented(g, h)) return found(g, k, h, *b);
      return {h, k, false, std::nullopt, EmbedMode::None};
    }
    std::optional<ElementId> four;
    if (h.order() == 4)
      h.elements().for_each([&](ElementId x) {
        if (h.universe().order_of(x) == 4) four = x;
      });
    if (four) {
      auto lattice = all_subgroups(g);
      lattice->require_complete();
      const Enumeration& e = h.universe();
      const ElementId gen = *four;
      const ElementId h2 = e.mul(gen, gen);
      if (zk.contains(h2)) {
        // index 2, meeting H exactly in its subgroup of order 2
        auto b = first_of_order(*lattice, g.order() / 2,
                                [&](const Subgroup& c) { return c.contains(h2) && !c.contains(gen); });
        if (b) return found(g, k, h, *b);
      }
      if (auto b = is_complemented(g, h)) return found(g, k, h, *b);
      return {h, k, false, std::nullopt, EmbedMode::None};
    }
  }

  auto lattice = all_subgroups(g);
  lattice->require_complete();
  const auto& subs = lattice->subgroups;
  for (std::size_t i = subs.size(); i-- > 0;) {
    const Subgroup& b = subs[i];
    if (!product_is(h, b, g)) continue;
    if (!(h.elements() & b.elements()).is_subset_of(zk.elements())) continue;
    return found(g, k, h, b);
  }
  return {h, k, false, std::nullopt, EmbedMode::None};
}

CEmbedReport is_c_embedded_in_p(const Subgroup& p, const Subgroup& h, EmbedSearch search) {
  return is_c_embedded(p, p, h, search);
}

bool witness_is_valid(const Subgroup& g, const CEmbedReport& report) {
  if (!report.verdict || !report.witness) return false;
  const Subgroup& b = *report.witness;
  if (!b.is_subgroup_of(g) || !product_is(report.h, b, g)) return false;
  return (report.h.elements() & b.elements()).is_subset_of(center(report.k).elements());
}

}  // namespace sylowlab
