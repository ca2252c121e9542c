#include "sylowlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "sylowlab/errors.hpp"
#include "sylowlab/verifier.hpp"

namespace sylowlab {

std::vector<std::string> suite_checks(const std::string& suite, std::uint64_t p) {
  if (suite == "A") return {"ss-embed"};
  if (suite == "B") return {"pn-embed"};
  if (suite == "asaad") return {"asaad"};
  if (suite == "classical") return {"burnside", "laffey", "bbg1", "bbg2", "wwl-cor"};
  if (suite == "lemmas") return {"min-residual", "min-supplement", "residual-monotone", "ss-normalizer", "wwl-identity"};
  if (suite == "in-P") return p % 2 ? std::vector<std::string>{"pn-embed-in-P"} : std::vector<std::string>{};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

namespace {

using Key = std::tuple<std::string, std::uint64_t, std::string>;

std::string digest(const ConditionReport& r) {
  std::ostringstream out;
  out << "c1=" << r.cond1 << " c2=" << (r.cond2 ? (*r.cond2 ? "1" : "0") : "-") << " concl=" << r.conclusion;
  if (r.witness) {
    const auto& w = *r.witness;
    out << " x=" << w.d.universe().element(w.x).to_cycle_string() << " D=" << w.d.order();
    if (w.h) {
      out << " H=";
      bool first = true;
      for (const auto& g : w.h->generator_perms()) {
        out << (first ? "" : ",") << g.to_cycle_string();
        first = false;
      }
    }
  }
  return out.str();
}

std::string digest(const CriterionResult& c) {
  std::string s = "hyp=" + std::to_string(c.hypothesis) + " concl=" + std::to_string(c.conclusion);
  if (!c.detail.empty()) s += " " + c.detail;
  return s;
}

struct GroupJob {
  const CatalogEntry* entry;
  GroupPtr group;
  std::vector<std::uint64_t> primes;
};

std::vector<std::uint64_t> primes_for(std::uint64_t order, const SweepOptions& options) {
  std::vector<std::uint64_t> out;
  for (auto q : prime_divisors(order))
    if (options.primes.empty() || std::find(options.primes.begin(), options.primes.end(), q) != options.primes.end())
      out.push_back(q);
  return out;
}

std::vector<Key> expected_keys(const std::string& id, const std::vector<std::uint64_t>& primes,
                               const std::set<std::string>& suites) {
  std::vector<Key> keys;
  for (auto q : primes)
    for (const auto& s : suites)
      for (const auto& c : suite_checks(s, q)) keys.emplace_back(id, q, c);
  return keys;
}

std::vector<CheckRecord> evaluate(const CatalogEntry& entry, const GroupPtr& group,
                                  const std::vector<std::uint64_t>& primes, const SweepOptions& options) {
  const Subgroup g = whole_group(group);
  std::vector<CheckRecord> out;
  auto add = [&](std::uint64_t p, std::string check, std::string verdict, std::string witness, double ms) {
    CheckRecord r;
    r.id = entry.id;
    r.prime = p;
    r.check = std::move(check);
    r.verdict = std::move(verdict);
    r.witness = std::move(witness);
    r.wall_ms = ms;
    out.push_back(std::move(r));
  };
  auto clock_ms = [](auto start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  for (auto p : primes) {
    for (const auto& suite : options.suites) {
      if (suite_checks(suite, p).empty()) continue;
      const auto start = std::chrono::steady_clock::now();
      if (suite == "A" || suite == "B") {
        auto res = verify_biconditional(g, entry.id, p, suite[0]);
        add(p, suite == "A" ? "ss-embed" : "pn-embed", to_string(res.verdict), digest(res.report), clock_ms(start));
      } else if (suite == "asaad") {
        auto res = verify_asaad(g, entry.id, p);
        add(p, "asaad", to_string(res.verdict), digest(res.report), clock_ms(start));
      } else if (suite == "in-P") {
        auto res = in_p_search_check(g, entry.id, p);
        std::string verdict = res.counterexample ? "counterexample" : res.search_disagreement ? "violation" : "pass";
        std::string w = digest(res.report);
        if (res.search_disagreement) w += " fast/general embedding searches disagree";
        add(p, "pn-embed-in-P", verdict, w, clock_ms(start));
      } else {
        auto results = suite == "classical" ? classical_criteria(g, p) : lemma_suite(g, entry.id, p, options.lemma_samples);
        const double ms = clock_ms(start) / static_cast<double>(results.size());
        for (const auto& c : results) add(p, c.name, to_string(c.verdict), digest(c), ms);
      }
    }
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const std::vector<CatalogEntry>& catalog, const SweepOptions& options) {
  for (const auto& s : options.suites) suite_checks(s, 3);
  SweepResult result;

  std::map<Key, CheckRecord> cached;
  if (options.cache)
    for (auto& r : options.cache->scan())
      if (r.version == tool_version()) cached[{r.id, r.prime, r.check}] = std::move(r);

  std::vector<std::vector<SweepRecord>> per_entry(catalog.size());
  std::vector<char> examined(catalog.size(), 0), from_cache(catalog.size(), 0);
  std::atomic<std::size_t> next{0}, done{0};
  std::mutex progress_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      const CatalogEntry& entry = catalog[i];
      auto& slot = per_entry[i];
      std::uint64_t order = 0;
      try {
        GroupPtr group = entry.build();
        order = group->order();
        if (options.max_order == 0 || order <= options.max_order) {
          auto primes = primes_for(order, options);
          auto keys = expected_keys(entry.id, primes, options.suites);
          if (!keys.empty()) {
            examined[i] = 1;
            bool hit = !cached.empty() && std::all_of(keys.begin(), keys.end(),
                                                      [&](const Key& k) { return cached.count(k) > 0; });
            if (hit) {
              from_cache[i] = 1;
              for (const auto& k : keys) slot.push_back({order, cached.at(k)});
            } else {
              for (auto& r : evaluate(entry, group, primes, options)) {
                if (options.cache) options.cache->append(r);
                slot.push_back({order, std::move(r)});
              }
            }
          }
        }
      } catch (const CapExceeded& ex) {
        examined[i] = 1;
        slot.clear();
        slot.push_back({order, CheckRecord{entry.id, 0, "*", "skipped", ex.what(), std::nullopt}});
      } catch (const IncompleteLattice& ex) {
        examined[i] = 1;
        slot.clear();
        slot.push_back({order, CheckRecord{entry.id, 0, "*", "skipped", ex.what(), std::nullopt}});
      } catch (const std::exception& ex) {
        examined[i] = 1;
        slot.clear();
        slot.push_back({order, CheckRecord{entry.id, 0, "*", "violation", std::string("error: ") + ex.what(),
                                           std::nullopt}});
      }
      if (!options.timings)
        for (auto& r : slot) r.record.wall_ms.reset();
      const std::size_t finished = ++done;
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(finished, catalog.size(), entry.id);
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < catalog.size(); ++i) {
    result.groups_examined += examined[i];
    result.groups_from_cache += from_cache[i];
    for (auto& r : per_entry[i]) result.records.push_back(std::move(r));
  }
  std::stable_sort(result.records.begin(), result.records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.order, a.record.id, a.record.prime, a.record.check) <
           std::tie(b.order, b.record.id, b.record.prime, b.record.check);
  });
  for (const auto& r : result.records) {
    if (r.record.verdict == "violation") result.violations.push_back(r);
    if (r.record.verdict == "counterexample") result.counterexamples.push_back(r);
    if (r.record.verdict == "skipped") result.skipped.push_back(r);
  }

  std::ostringstream desc;
  desc << "suites=";
  bool first = true;
  for (const auto& s : options.suites) {
    desc << (first ? "" : ",") << s;
    first = false;
  }
  desc << " max_order=" << options.max_order << " catalog=" << catalog.size();
  result.descriptor = desc.str();
  return result;
}

}  // namespace sylowlab
