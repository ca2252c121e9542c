#include "sylowlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sylowlab {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::SsEmbed: return "ss-embed";
    case Variant::PnEmbed: return "pn-embed";
    case Variant::PnEmbedInP: return "pn-embed-in-P";
    case Variant::SsEmbedInP: return "ss-embed-in-P";
    case Variant::Asaad: return "asaad";
  }
  return "?";
}

Variant variant_from_string(const std::string& name) {
  for (Variant v : {Variant::SsEmbed, Variant::PnEmbed, Variant::PnEmbedInP, Variant::SsEmbedInP, Variant::Asaad})
    if (to_string(v) == name) return v;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Violation: return "violation";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

bool supersolvable_side(Variant v) { return v == Variant::SsEmbed || v == Variant::SsEmbedInP; }
bool embeds_in_p(Variant v) { return v == Variant::PnEmbedInP || v == Variant::SsEmbedInP; }

FormationTag residual_formation(Variant v, std::uint64_t p) {
  return v == Variant::Asaad ? FormationTag::nilpotent() : FormationTag::p_supersolvable(p);
}

bool embedded(const Subgroup& g, const Subgroup& p_sub, const Subgroup& h, Variant v, EmbedSearch search) {
  if (embeds_in_p(v)) return is_c_embedded_in_p(p_sub, h, search).verdict;
  return is_c_embedded(g, p_sub, h, search).verdict;
}

ElementSet conjugate_set(const Subgroup& h, ElementId x) {
  const Enumeration& e = h.universe();
  ElementSet out = e.empty_set();
  h.elements().for_each([&](ElementId a) { out.set(e.conj(a, x)); });
  return out;
}

std::vector<Subgroup> tested_subgroups(const Subgroup& d, std::uint64_t p, bool& quaternion_free) {
  std::vector<Subgroup> out = cyclic_subgroups_of_order(d, p);
  quaternion_free = true;
  if (p == 2 && d.order() >= 8) {
    quaternion_free = is_quaternion_free(d);
    if (!quaternion_free)
      for (auto& c : cyclic_subgroups_of_order(d, 4)) out.push_back(std::move(c));
  }
  return out;
}

std::string cycles_of(const Subgroup& s) {
  std::string out;
  for (const auto& g : s.generator_perms()) {
    if (!out.empty()) out += ",";
    out += g.to_cycle_string();
  }
  return out.empty() ? "()" : out;
}

}  // namespace

ConditionReport condition_set(const Subgroup& g, const std::string& id, std::uint64_t p, Variant variant,
                              const ConditionOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument("condition_set needs a prime, got " + std::to_string(p));
  const auto start = std::chrono::steady_clock::now();
  ConditionReport r;
  r.group_id = id;
  r.p = p;
  r.variant = variant;
  auto finish = [&]() -> ConditionReport& {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  if (g.order() % p != 0) {
    r.cond1 = true;
    r.cond2 = true;
    r.conclusion = true;
    return finish();
  }

  const Subgroup p_sub = options.sylow ? *options.sylow : sylow_subgroup(g, p);
  if (!p_sub.is_subgroup_of(g) || p_sub.order() != p_part(g.order(), p))
    throw std::invalid_argument("supplied subgroup is not a Sylow subgroup of " + id);
  const Subgroup n = normalizer(g, p_sub);
  const bool ss = supersolvable_side(variant);
  r.cond1 = ss ? is_p_supersolvable(n, p) : is_p_nilpotent(n, p);
  r.conclusion = ss ? is_p_supersolvable(g, p) : is_p_nilpotent(g, p);
  if (!r.cond1) return finish();

  r.cond2 = true;
  const Subgroup res = residual(g, residual_formation(variant, p));
  if (res.is_trivial()) return finish();
  const ElementSet res_p = res.elements() & p_sub.elements();
  if (res_p.count() == 1) return finish();

  std::vector<ElementId> xs;
  if (options.every_element) {
    g.elements().for_each([&](ElementId x) {
      if (!n.contains(x)) xs.push_back(x);
    });
  } else {
    xs = right_transversal(g, n);
    xs.erase(xs.begin());
  }

  const Enumeration& e = g.universe();
  const Subgroup zp = center(p_sub);
  std::unordered_set<ElementSet, ElementSetHash> seen_conjugates, seen_d;
  std::unordered_map<ElementSet, bool, ElementSetHash> verdicts;
  for (ElementId x : xs) {
    ElementSet px = conjugate_set(p_sub, x);
    ElementSet dset = res_p & px;
    if (!seen_conjugates.insert(std::move(px)).second) continue;
    if (dset.count() == 1 || !seen_d.insert(dset).second) continue;
    const Subgroup d = subgroup_from_set(g.parent_ptr(), dset);

    if (variant == Variant::Asaad) {
      std::optional<ElementId> bad;
      d.elements().for_each([&](ElementId y) {
        if (!bad && e.order_of(y) == p && !zp.contains(y)) bad = y;
      });
      if (bad) {
        r.cond2 = false;
        r.witness = ConditionWitness{x, d, cyclic_subgroup(g.parent_ptr(), *bad),
                                     "element of order p in the intersection is not central in P"};
        return finish();
      }
      continue;
    }

    bool qfree = true;
    for (const auto& h : tested_subgroups(d, p, qfree)) {
      auto it = verdicts.find(h.elements());
      bool ok;
      if (it != verdicts.end()) {
        ok = it->second;
      } else {
        ok = embedded(g, p_sub, h, variant, options.search);
        verdicts.emplace(h.elements(), ok);
      }
      if (!ok) {
        r.cond2 = false;
        std::string what = h.order() == p ? "subgroup of order " + std::to_string(p) : "cyclic subgroup of order 4";
        r.witness = ConditionWitness{x, d, h,
                                     what + (embeds_in_p(variant) ? " is not c-embedded in P with respect to P"
                                                                  : " is not c-embedded in G with respect to P")};
        return finish();
      }
    }
  }
  return finish();
}

bool recheck_witness(const Subgroup& g, const ConditionReport& report) {
  if (!report.witness || !report.witness->h || report.cond2.value_or(true)) return false;
  const ConditionWitness& w = *report.witness;
  const std::uint64_t p = report.p;
  const Subgroup p_sub = sylow_subgroup(g, p);
  const Subgroup n = normalizer(g, p_sub);
  if (n.contains(w.x)) return false;
  const Subgroup res = residual(g, residual_formation(report.variant, p));
  const ElementSet d = res.elements() & p_sub.elements() & conjugate_set(p_sub, w.x);
  if (!(d == w.d.elements()) || !w.h->is_subgroup_of(w.d)) return false;
  const Subgroup& h = *w.h;
  if (report.variant == Variant::Asaad) return h.order() == p && !h.is_subgroup_of(center(p_sub));
  if (h.order() == 4) {
    bool cyclic = false;
    h.elements().for_each([&](ElementId y) { cyclic = cyclic || g.universe().order_of(y) == 4; });
    if (p != 2 || !cyclic || is_quaternion_free(w.d)) return false;
  } else if (h.order() != p) {
    return false;
  }
  return !embedded(g, p_sub, h, report.variant, EmbedSearch::General);
}

std::string ConditionReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["id"] = group_id;
  j["prime"] = p;
  j["variant"] = to_string(variant);
  j["cond1"] = cond1;
  j["cond2"] = cond2 ? nlohmann::ordered_json(*cond2) : nlohmann::ordered_json(nullptr);
  j["conclusion"] = conclusion;
  if (witness) {
    nlohmann::ordered_json w;
    const Enumeration& e = witness->d.universe();
    w["x"] = e.element(witness->x).to_cycle_string();
    w["D_order"] = witness->d.order();
    w["D"] = cycles_of(witness->d);
    w["H"] = witness->h ? cycles_of(*witness->h) : "";
    w["reason"] = witness->reason;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (with_timing) j["seconds"] = seconds;
  return j.dump();
}

BiconditionalResult verify_biconditional(const Subgroup& g, const std::string& id, std::uint64_t p, char which,
                                         const ConditionOptions& options) {
  if (which != 'A' && which != 'B') throw std::invalid_argument("which must be 'A' or 'B'");
  BiconditionalResult out;
  out.report = condition_set(g, id, p, which == 'A' ? Variant::SsEmbed : Variant::PnEmbed, options);
  if (which == 'A' && !is_p_solvable(g, p)) {
    out.verdict = Verdict::NotApplicable;
    return out;
  }
  out.verdict = out.report.hypotheses() == out.report.conclusion ? Verdict::Pass : Verdict::Violation;
  return out;
}

BiconditionalResult verify_asaad(const Subgroup& g, const std::string& id, std::uint64_t p) {
  BiconditionalResult out;
  out.report = condition_set(g, id, p, Variant::Asaad);
  if (p == 2 && g.order() % 2 == 0 && !is_quaternion_free(sylow_subgroup(g, 2))) {
    out.verdict = Verdict::NotApplicable;
    return out;
  }
  out.verdict = out.report.hypotheses() == out.report.conclusion ? Verdict::Pass : Verdict::Violation;
  return out;
}

namespace {

CriterionResult implication(std::string name, bool hypothesis, bool conclusion, std::string detail = {}) {
  CriterionResult c{std::move(name), Verdict::NotApplicable, hypothesis, conclusion, std::move(detail)};
  if (hypothesis) c.verdict = conclusion ? Verdict::Pass : Verdict::Violation;
  return c;
}

CriterionResult equivalence(std::string name, bool lhs, bool rhs, std::string detail = {}) {
  return {std::move(name), lhs == rhs ? Verdict::Pass : Verdict::Violation, lhs, rhs, std::move(detail)};
}

}  // namespace

std::vector<CriterionResult> classical_criteria(const Subgroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("classical_criteria needs a prime");
  const Subgroup p_sub = sylow_subgroup(g, p);
  const Subgroup n = normalizer(g, p_sub);
  const Subgroup zn = center(n);
  const Subgroup zp = center(p_sub);
  const bool pnil = is_p_nilpotent(g, p);
  const bool n_pnil = is_p_nilpotent(n, p);
  const Subgroup p_derived = intersection(p_sub, derived_subgroup(g));

  std::vector<CriterionResult> out;
  out.push_back(implication("burnside", p_sub.is_subgroup_of(zn), pnil));
  out.push_back(implication("laffey", omega_star(p_sub, p).is_subgroup_of(zp) && n_pnil, pnil));
  out.push_back(implication("bbg1", omega_star(p_derived, p).is_subgroup_of(zn), pnil));
  if (p == 2) {
    const bool hyp = omega(p_derived, 2, 1).is_subgroup_of(zp) && is_quaternion_free(p_sub) && n_pnil;
    out.push_back(implication("bbg2", hyp, pnil));
  } else {
    out.push_back({"bbg2", Verdict::NotApplicable, false, pnil, "odd prime"});
  }

  const Subgroup m = intersection(p_sub, residual(g, FormationTag::p_nilpotent(p)));
  bool complemented = true;
  for (const auto& h : cyclic_subgroups_of_order(m, p)) {
    if (!is_complemented(p_sub, h)) {
      complemented = false;
      break;
    }
  }
  out.push_back(equivalence("wwl-cor", complemented && n_pnil, pnil));
  return out;
}

std::vector<CriterionResult> lemma_suite(const Subgroup& g, const std::string& id, std::uint64_t p,
                                         std::size_t samples) {
  if (!is_prime(p)) throw std::invalid_argument("lemma_suite needs a prime");
  std::vector<CriterionResult> out;
  const Subgroup res = residual(g, FormationTag::p_supersolvable(p));
  const bool minimal = is_p_solvable(g, p) && is_minimal_non_p_supersolvable(g, p);
  auto lattice = all_subgroups(g);
  lattice->require_complete();

  {
    bool ok = false;
    std::ostringstream detail;
    if (minimal) {
      const bool p_group = is_power_of(res.order(), p);
      const std::uint64_t exp = exponent(res);
      const bool exp_ok = p_group && (p == 2 ? exp <= 4 : exp == p);
      bool chief = false;
      if (p_group) {
        const Subgroup phi = frattini_p_group(res, p);
        chief = is_normal_in(phi, g);
        for (const auto& m : *normal_subgroups(g))
          if (m.order() > phi.order() && m.order() < res.order() && phi.is_subgroup_of(m) &&
              m.is_subgroup_of(res))
            chief = false;
      }
      ok = p_group && exp_ok && chief;
      detail << "res=" << res.order() << " exp=" << exp << " chief=" << chief;
    }
    out.push_back(implication("min-residual", minimal, ok, detail.str()));
  }

  {
    bool ok = true;
    std::string detail;
    if (minimal) {
      for (const auto& h : lattice->subgroups) {
        if (!ok) break;
        if (h.order() >= res.order() || !h.is_subgroup_of(res)) continue;
        for (const auto& b : lattice->subgroups) {
          if (b.order() == g.order() || b.order() * h.order() < g.order()) continue;
          if (product_is(h, b, g)) {
            ok = false;
            detail = "H of order " + std::to_string(h.order()) + " with proper B of order " + std::to_string(b.order());
            break;
          }
        }
      }
    }
    out.push_back(implication("min-supplement", minimal, ok, detail));
  }

  {
    const auto& subs = lattice->subgroups;
    std::vector<std::size_t> picks(subs.size());
    for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
    if (picks.size() > samples) {
      std::vector<std::size_t> chosen;
      std::mt19937_64 rng(stable_hash(id + "#" + std::to_string(p)));
      std::sample(picks.begin(), picks.end(), std::back_inserter(chosen), samples, rng);
      picks = std::move(chosen);
    }
    bool ok = true;
    std::string detail;
    for (std::size_t i : picks) {
      if (!residual(subs[i], FormationTag::p_supersolvable(p)).is_subgroup_of(res)) {
        ok = false;
        detail = "L of order " + std::to_string(subs[i].order());
        break;
      }
    }
    out.push_back(equivalence("residual-monotone", true, ok, detail.empty() ? std::to_string(picks.size()) + " subgroups" : detail));
  }

  const Subgroup p_sub = sylow_subgroup(g, p);
  const Subgroup n = normalizer(g, p_sub);
  out.push_back(implication("ss-normalizer", is_p_supersolvable(g, p) && is_p_nilpotent(n, p), is_p_nilpotent(g, p)));

  const ElementSet lhs = p_sub.elements() & residual(g, FormationTag::nilpotent()).elements();
  const ElementSet rhs = p_sub.elements() & residual(g, FormationTag::p_nilpotent(p)).elements();
  out.push_back(equivalence("wwl-identity", true, lhs == rhs));
  return out;
}

InPSearchOutcome in_p_search_check(const Subgroup& g, const std::string& id, std::uint64_t p) {
  InPSearchOutcome out;
  out.report = condition_set(g, id, p, Variant::PnEmbedInP);
  if (!out.report.hypotheses() || out.report.conclusion) return out;
  ConditionReport slow = condition_set(g, id, p, Variant::PnEmbedInP, {EmbedSearch::General, std::nullopt, false});
  if (slow.hypotheses()) {
    out.counterexample = true;
    out.report = slow;
  } else {
    out.search_disagreement = true;
  }
  return out;
}

}  // namespace sylowlab
