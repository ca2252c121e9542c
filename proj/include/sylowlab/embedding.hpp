#pragma once

#include <optional>
#include <string>

#include "sylowlab/subgroup.hpp"

namespace sylowlab {

/// Which case of H ∩ B produced the witness B.
enum class EmbedMode {
  Central,       // B = G and H <= Z(K)
  Complemented,  // H ∩ B = 1
  Partial,       // 1 < H ∩ B < H
  None,
};

std::string to_string(EmbedMode m);

/// Outcome of the c-embedding test: H is c-embedded in G with respect to K
/// when some B <= G has G = HB and H ∩ B <= Z(K).
struct CEmbedReport {
  Subgroup h;
  Subgroup k;
  bool verdict = false;
  std::optional<Subgroup> witness;
  EmbedMode mode = EmbedMode::None;
};

enum class EmbedSearch {
  /// Shortcuts for H <= Z(K), |H| prime and H cyclic of order 4; the general
  /// scan otherwise.
  Fast,
  /// Scan every subgroup of G by decreasing order.
  General,
};

/// Some B with HB = G and H ∩ B = 1, first in decreasing canonical order.
/// Needs a complete lattice of G.
std::optional<Subgroup> is_complemented(const Subgroup& g, const Subgroup& h);

/// Throws std::invalid_argument unless H <= K <= G, and IncompleteLattice when
/// the lattice of G was truncated.
CEmbedReport is_c_embedded(const Subgroup& g, const Subgroup& k, const Subgroup& h,
                           EmbedSearch search = EmbedSearch::Fast);

/// G = K = P.
CEmbedReport is_c_embedded_in_p(const Subgroup& p, const Subgroup& h, EmbedSearch search = EmbedSearch::Fast);

/// Re-checks a positive report from scratch: |H||B| = |G||H ∩ B| and H ∩ B <= Z(K).
bool witness_is_valid(const Subgroup& g, const CEmbedReport& report);

}  // namespace sylowlab
