#include "sylowlab/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "sylowlab/cache.hpp"
#include "sylowlab/catalog.hpp"
#include "sylowlab/errors.hpp"
#include "sylowlab/sweep.hpp"
#include "sylowlab/verifier.hpp"

namespace sylowlab {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string primes = "all";
  std::string format = "table";
  std::size_t enum_cap = 0, lattice_cap = 0, quotient_cap = 0;
};

struct SweepFlags {
  std::uint64_t max_order = 0;
  unsigned jobs = 1;
  std::string cache;
  std::vector<std::string> catalogs;
  bool no_builtin = false;
  bool timings = false;
  bool quiet = false;
};

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  if (text == "all") return {};
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--p expects 'all' or a comma-separated list of primes, got '" + text + "'");
    }
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    out.push_back(p);
  }
  if (out.empty()) throw UsageError("--p list is empty");
  return out;
}

void apply_caps(const CommonFlags& f) {
  if (f.enum_cap) limits().enumeration_cap = f.enum_cap;
  if (f.lattice_cap) limits().lattice_cap = f.lattice_cap;
  if (f.quotient_cap) limits().quotient_degree_cap = f.quotient_cap;
}

CatalogEntry resolve_group(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    const std::string rest = spec.substr(5);
    const auto hash = rest.rfind('#');
    if (hash == std::string::npos) throw UsageError("file groups are written file:<path>#<id>");
    const std::string id = rest.substr(hash + 1);
    for (auto& e : load_catalog(rest.substr(0, hash)))
      if (e.id == id) return e;
    throw UsageError("no group with id '" + id + "' in " + rest.substr(0, hash));
  }
  const std::string body = spec.rfind("builtin:", 0) == 0 ? spec.substr(8) : spec;
  try {
    return builtin_construct(body);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string conditions_line(const ConditionReport& r) {
  std::ostringstream out;
  out << "cond1=" << yes_no(r.cond1) << " cond2=" << (r.cond2 ? yes_no(*r.cond2) : "-")
      << " conclusion=" << yes_no(r.conclusion);
  if (r.witness) {
    const auto& w = *r.witness;
    out << "  [x=" << w.d.universe().element(w.x).to_cycle_string() << " |D|=" << w.d.order();
    if (w.h) {
      out << " H=<";
      bool first = true;
      for (const auto& g : w.h->generator_perms()) {
        out << (first ? "" : ", ") << g.to_cycle_string();
        first = false;
      }
      out << ">";
    }
    out << ": " << w.reason << "]";
  }
  return out.str();
}

int cmd_analyze(const std::string& spec, const CommonFlags& flags, bool timings, std::ostream& out) {
  const CatalogEntry entry = resolve_group(spec);
  const GroupPtr group = entry.build();
  const Subgroup g = whole_group(group);
  auto primes = parse_primes(flags.primes);
  if (primes.empty()) primes = prime_divisors(g.order());
  const bool jsonl = flags.format == "jsonl";

  auto row = [&](const std::string& key, const auto& value, int indent = 0) {
    out << std::string(indent, ' ') << std::left << std::setw(30 - indent) << key << value << '\n';
  };
  if (!jsonl) {
    row("group", entry.id);
    row("order", g.order());
    row("degree", group->degree());
    row("center order", center(g).order());
    row("derived subgroup order", derived_subgroup(g).order());
    row("solvable", yes_no(is_solvable(g)));
    row("nilpotent", yes_no(is_nilpotent(g)));
    row("residual N order", residual(g, FormationTag::nilpotent()).order());
  }

  const Variant variants[] = {Variant::SsEmbed, Variant::PnEmbed, Variant::Asaad, Variant::PnEmbedInP, Variant::SsEmbedInP};
  for (auto p : primes) {
    std::vector<ConditionReport> reports;
    for (Variant v : variants) reports.push_back(condition_set(g, entry.id, p, v));
    if (jsonl) {
      for (const auto& r : reports) out << r.to_json(timings) << '\n';
      continue;
    }
    const Subgroup p_sub = sylow_subgroup(g, p);
    const Subgroup n = normalizer(g, p_sub);
    out << "\np = " << p << '\n';
    row("sylow order", p_sub.order(), 2);
    row("sylow center order", center(p_sub).order(), 2);
    row("normalizer order", n.order(), 2);
    row("normalizer center order", center(n).order(), 2);
    row("normalizer p-nilpotent", yes_no(is_p_nilpotent(n, p)), 2);
    row("normalizer p-supersolvable", yes_no(is_p_supersolvable(n, p)), 2);
    row("p-nilpotent", yes_no(is_p_nilpotent(g, p)), 2);
    row("p-solvable", yes_no(is_p_solvable(g, p)), 2);
    row("p-supersolvable", yes_no(is_p_supersolvable(g, p)), 2);
    row("residual N_" + std::to_string(p) + " order", residual(g, FormationTag::p_nilpotent(p)).order(), 2);
    row("residual U_" + std::to_string(p) + " order", residual(g, FormationTag::p_supersolvable(p)).order(), 2);
    row("p'-core order", p_prime_core(g, p).order(), 2);
    if (p == 2) row("sylow quaternion-free", yes_no(is_quaternion_free(p_sub)), 2);
    for (const auto& r : reports) {
      std::string line = conditions_line(r);
      if (timings) line += "  (" + std::to_string(r.seconds * 1000.0) + " ms)";
      row(to_string(r.variant), line, 2);
    }
    if (!is_p_solvable(g, p)) row("note", "not p-solvable, the supersolvable criterion does not apply", 2);
  }
  return 0;
}

std::vector<CatalogEntry> assemble_catalog(const SweepFlags& flags, std::uint64_t max_order) {
  std::vector<CatalogEntry> catalog;
  if (!flags.no_builtin) catalog = builtin_catalog(max_order);
  std::set<std::string> ids;
  for (const auto& e : catalog) ids.insert(e.id);
  for (const auto& path : flags.catalogs) {
    for (auto& e : load_catalog(path)) {
      if (!ids.insert(e.id).second) throw UsageError("duplicate group id '" + e.id + "' in " + path);
      catalog.push_back(std::move(e));
    }
  }
  return catalog;
}

int run_sweep_command(const std::set<std::string>& suites, const CommonFlags& common, const SweepFlags& flags,
                      std::uint64_t max_order, std::vector<std::uint64_t> primes, std::ostream& out,
                      std::ostream& err) {
  const auto catalog = assemble_catalog(flags, max_order);
  std::unique_ptr<ResultCache> cache;
  std::string cache_path = flags.cache;
  if (cache_path.empty())
    if (auto env = default_cache_path()) cache_path = *env;
  if (!cache_path.empty()) cache = std::make_unique<ResultCache>(cache_path);

  SweepOptions options;
  options.suites = suites;
  options.primes = std::move(primes);
  options.max_order = max_order;
  options.jobs = flags.jobs;
  options.cache = cache.get();
  options.timings = flags.timings;
  if (!flags.quiet)
    options.progress = [&err](std::size_t done, std::size_t total, const std::string& id) {
      if (done % 50 == 0 || done == total) err << "[" << done << "/" << total << "] " << id << '\n';
    };
  const SweepResult result = run_sweep(catalog, options);

  if (common.format == "jsonl") {
    for (const auto& r : result.records) out << r.record.to_json() << '\n';
  } else {
    out << "# " << result.descriptor << '\n';
    for (const auto& r : result.records) {
      out << std::left << std::setw(6) << r.order << std::setw(16) << r.record.id << std::setw(4) << r.record.prime
          << std::setw(19) << r.record.check << std::setw(16) << r.record.verdict << r.record.witness;
      if (r.record.wall_ms) out << "  (" << *r.record.wall_ms << " ms)";
      out << '\n';
    }
  }
  std::ostringstream summary;
  summary << "groups examined: " << result.groups_examined << ", records: " << result.records.size()
          << ", violations: " << result.violations.size() << ", counterexamples: " << result.counterexamples.size()
          << ", skipped: " << result.skipped.size();
  if (common.format == "jsonl") {
    err << summary.str() << '\n';
  } else {
    out << summary.str() << '\n';
    for (const auto& r : result.skipped) out << "skipped " << r.record.id << ": " << r.record.witness << '\n';
    for (const auto& r : result.violations)
      out << "VIOLATION " << r.record.id << " p=" << r.record.prime << " " << r.record.check << ": "
          << r.record.witness << '\n';
    for (const auto& r : result.counterexamples)
      out << "COUNTEREXAMPLE " << r.record.id << " p=" << r.record.prime << ": " << r.record.witness << '\n';
  }
  if (cache) err << "cache: " << result.groups_from_cache << " group(s) reused from " << cache->path() << '\n';
  return result.violations.empty() && result.counterexamples.empty() ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--p", f.primes, "Prime(s): 'all' or a comma-separated list")->capture_default_str();
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"table", "jsonl"}))
      ->capture_default_str();
  cmd->add_option("--enum-cap", f.enum_cap, "Element enumeration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--lattice-cap", f.lattice_cap, "Subgroup lattice size cap")->check(CLI::PositiveNumber);
  cmd->add_option("--quotient-cap", f.quotient_cap, "Quotient action degree cap")->check(CLI::PositiveNumber);
}

void add_sweep(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--max-order", f.max_order, "Largest group order to examine")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--cache", f.cache, "Result cache file (default: $SYLOWLAB_CACHE)");
  cmd->add_option("--catalog", f.catalogs, "Extra catalog file (repeatable)")->check(CLI::ExistingFile);
  cmd->add_flag("--no-builtin", f.no_builtin, "Skip the builtin catalog");
  cmd->add_flag("--timings", f.timings, "Include wall times in the output");
  cmd->add_flag("--quiet", f.quiet, "No progress on stderr");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sylow normalizer and embedding criteria for finite permutation groups", "sylowlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  CommonFlags analyze_flags, verify_flags, search_flags;
  SweepFlags verify_sweep, search_sweep;
  std::string group_spec;
  bool analyze_timings = false;
  std::string which = "A,B";
  search_sweep.max_order = 200;

  auto* analyze = app.add_subcommand("analyze", "Structure report and theorem conditions for one group");
  analyze->add_option("group", group_spec, "builtin:<spec> or file:<path>#<id>")->required();
  add_common(analyze, analyze_flags);
  analyze->add_flag("--timings", analyze_timings, "Include wall times");

  auto* verify = app.add_subcommand("verify", "Check theorem and lemma statements over a catalog");
  verify->add_option("--which", which, "Suites: A,B,asaad,classical,lemmas")->capture_default_str();
  add_common(verify, verify_flags);
  add_sweep(verify, verify_sweep);
  verify_sweep.max_order = 120;

  auto* search = app.add_subcommand("search-q9", "Search a catalog for counterexamples to the in-P variant");
  add_common(search, search_flags);
  add_sweep(search, search_sweep);

  const Limits saved = limits();
  int code = 0;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int rc = app.exit(e, out, err);
      return rc == 0 ? 0 : 2;
    }

    if (*analyze) {
      apply_caps(analyze_flags);
      code = cmd_analyze(group_spec, analyze_flags, analyze_timings, out);
    } else if (*verify) {
      apply_caps(verify_flags);
      std::set<std::string> suites;
      std::stringstream in(which);
      std::string item;
      while (std::getline(in, item, ','))
        if (!item.empty()) suites.insert(item);
      const std::set<std::string> known{"A", "B", "asaad", "classical", "lemmas"};
      for (const auto& s : suites)
        if (!known.count(s)) throw UsageError("unknown suite '" + s + "' in --which");
      if (suites.empty()) throw UsageError("--which selects no suite");
      code = run_sweep_command(suites, verify_flags, verify_sweep, verify_sweep.max_order,
                               parse_primes(verify_flags.primes), out, err);
    } else if (*search) {
      apply_caps(search_flags);
      auto primes = parse_primes(search_flags.primes);
      for (auto p : primes)
        if (p == 2) throw UsageError("search-q9 takes odd primes only");
      code = run_sweep_command({"in-P"}, search_flags, search_sweep, search_sweep.max_order, primes, out, err);
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    code = 2;
  }
  limits() = saved;
  return code;
}

}  // namespace sylowlab
