#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylowlab/embedding.hpp"
#include "sylowlab/structure.hpp"

namespace sylowlab {

/// Which hypothesis set condition_set evaluates.
///   SsEmbed     normalizer p-supersolvable; order-p (and order-4) subgroups of
///               G^Up ∩ P ∩ P^x c-embedded in G w.r.t. P; concludes p-supersolvable.
///   PnEmbed     as SsEmbed with a p-nilpotent normalizer; concludes p-nilpotent.
///   PnEmbedInP  as PnEmbed, but the embedding is taken inside P (G = K = P).
///   SsEmbedInP  as SsEmbed, with the embedding taken inside P.
///   Asaad       p-nilpotent normalizer and Omega_1(G^N ∩ P ∩ P^x) <= Z(P);
///               concludes p-nilpotent.
enum class Variant { SsEmbed, PnEmbed, PnEmbedInP, SsEmbedInP, Asaad };

std::string to_string(Variant v);
/// Throws std::invalid_argument on an unknown name.
Variant variant_from_string(const std::string& name);

/// Where the second condition failed.
struct ConditionWitness {
  ElementId x = 0;          // coset representative, x outside N_G(P)
  Subgroup d;               // residual ∩ P ∩ P^x
  std::optional<Subgroup> h;  // failing subgroup of d
  std::string reason;
};

struct ConditionReport {
  std::string group_id;
  std::uint64_t p = 0;
  Variant variant = Variant::SsEmbed;
  bool cond1 = false;
  /// Empty when cond1 failed and the second condition was not evaluated.
  std::optional<bool> cond2;
  bool conclusion = false;
  std::optional<ConditionWitness> witness;
  double seconds = 0;

  bool hypotheses() const { return cond1 && cond2.value_or(false); }
  /// Witness elements are written as 1-based cycle strings; timing only on request.
  std::string to_json(bool with_timing = false) const;
};

struct ConditionOptions {
  EmbedSearch search = EmbedSearch::Fast;
  /// Use this Sylow subgroup instead of the deterministic one.
  std::optional<Subgroup> sylow;
  /// Run over every x outside N_G(P) rather than one per coset.
  bool every_element = false;
};

/// Evaluates both conditions and the conclusion for `g` (a whole group or any
/// subgroup acting as ambient). The second condition short-circuits on the
/// first failing subgroup and records it.
ConditionReport condition_set(const Subgroup& g, const std::string& id, std::uint64_t p, Variant variant,
                              const ConditionOptions& options = {});

/// Re-derives the recorded failure from scratch: h lies in residual ∩ P ∩ P^x
/// and fails the variant's test. True when the witness reproduces.
bool recheck_witness(const Subgroup& g, const ConditionReport& report);

enum class Verdict { Pass, Violation, NotApplicable };
std::string to_string(Verdict v);

/// One checked statement: `hypothesis` should imply (or, for equivalences,
/// match) `conclusion`.
struct CriterionResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  bool hypothesis = false;
  bool conclusion = false;
  std::string detail;
};

struct BiconditionalResult {
  Verdict verdict = Verdict::Pass;
  ConditionReport report;
};

/// The supersolvable form (which = 'A') is not applicable to groups that are not p-solvable;
/// the report is still filled in.
BiconditionalResult verify_biconditional(const Subgroup& g, const std::string& id, std::uint64_t p, char which,
                                         const ConditionOptions& options = {});

/// Not applicable for p = 2 unless P is quaternion-free.
BiconditionalResult verify_asaad(const Subgroup& g, const std::string& id, std::uint64_t p);

/// burnside, laffey, bbg1, bbg2, wwl-cor, in that order.
std::vector<CriterionResult> classical_criteria(const Subgroup& g, std::uint64_t p);

/// min-residual, min-supplement, residual-monotone, ss-normalizer, wwl-identity.
/// residual-monotone samples up to `samples` subgroups L, seeded from the id and p.
std::vector<CriterionResult> lemma_suite(const Subgroup& g, const std::string& id, std::uint64_t p,
                                         std::size_t samples = 200);

/// PnEmbedInP test for one group and odd p: hypotheses holding while the
/// conclusion fails. A candidate is re-run with the general search before it counts.
struct InPSearchOutcome {
  bool counterexample = false;
  /// The fast and general searches disagreed on the candidate.
  bool search_disagreement = false;
  ConditionReport report;
};
InPSearchOutcome in_p_search_check(const Subgroup& g, const std::string& id, std::uint64_t p);

/// Stable 64-bit FNV-1a, used to seed per-group sampling.
std::uint64_t stable_hash(const std::string& s);

}  // namespace sylowlab
