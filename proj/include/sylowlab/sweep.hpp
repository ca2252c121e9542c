#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sylowlab/cache.hpp"
#include "sylowlab/catalog.hpp"

namespace sylowlab {

/// Suites: "A", "B", "asaad", "classical", "lemmas", "in-P".
struct SweepOptions {
  std::set<std::string> suites;
  /// Empty means every prime divisor of each group's order.
  std::vector<std::uint64_t> primes;
  std::uint64_t max_order = 0;  // 0 = no bound
  unsigned jobs = 1;
  ResultCache* cache = nullptr;
  bool timings = false;
  std::size_t lemma_samples = 200;
  std::function<void(std::size_t done, std::size_t total, const std::string& id)> progress;
};

/// Check names emitted for one suite at one prime.
std::vector<std::string> suite_checks(const std::string& suite, std::uint64_t p);

struct SweepRecord {
  std::uint64_t order = 0;
  CheckRecord record;
};

struct SweepResult {
  std::string descriptor;
  std::size_t groups_examined = 0;
  std::size_t groups_from_cache = 0;
  /// Sorted by (group order, group id, prime, check).
  std::vector<SweepRecord> records;
  std::vector<SweepRecord> violations;
  std::vector<SweepRecord> counterexamples;
  std::vector<SweepRecord> skipped;
};

/// Runs the selected suites over every catalog entry of order <= max_order.
/// Entries whose checks are all already in the cache (same tool version) are
/// not recomputed. Cap errors turn into "skipped" records with check "*".
SweepResult run_sweep(const std::vector<CatalogEntry>& catalog, const SweepOptions& options);

}  // namespace sylowlab
