#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "oracles.hpp"
#include "sylowlab/cache.hpp"
#include "sylowlab/cli.hpp"

using namespace sylowlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sylowlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

/// Value column of the first line whose label starts with `key`, within the
/// block that follows `section` (or anywhere when section is empty).
std::string field(const std::string& text, const std::string& key, const std::string& section = {}) {
  std::istringstream in(text);
  std::string line;
  bool active = section.empty();
  while (std::getline(in, line)) {
    if (!section.empty() && line == section) active = true;
    if (!active) continue;
    const auto start = line.find_first_not_of(' ');
    if (start == std::string::npos || line.compare(start, key.size(), key) != 0) continue;
    const auto rest = line.substr(start + key.size());
    const auto v = rest.find_first_not_of(' ');
    return v == std::string::npos ? "" : rest.substr(v);
  }
  return "<missing>";
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"analyze", "builtin:X9"}).code == 2);
  CHECK(cli({"analyze", "builtin:S4", "--p", "four"}).code == 2);
  CHECK(cli({"analyze", "file:/nonexistent#G"}).code == 2);
  CHECK(cli({"analyze", "file:" + fixtures::path("sl23.jsonl") + "#nope"}).code == 2);
  CHECK(cli({"search-q9", "--p", "2", "--max-order", "10"}).code == 2);
  CHECK(cli({"verify", "--catalog", "/nonexistent.jsonl"}).code == 2);
  CHECK(cli({"verify", "--which", "Z", "--max-order", "4"}).code == 2);
  CHECK(cli({"verify", "--max-order", "0"}).code == 2);
}

TEST_CASE("analyze A5 at 5") {
  auto r = cli({"analyze", "builtin:A5", "--p", "5"});
  REQUIRE(r.code == 0);
  CHECK(field(r.out, "order") == "60");
  CHECK(field(r.out, "normalizer order", "p = 5") == "10");
  CHECK(field(r.out, "p-supersolvable", "p = 5") == "no");
  CHECK(field(r.out, "p-solvable", "p = 5") == "no");
  CHECK(field(r.out, "ss-embed ", "p = 5") == "cond1=yes cond2=yes conclusion=no");
  CHECK(r.out.find("p = 2") == std::string::npos);
}

TEST_CASE("analyze S4 at 2") {
  auto r = cli({"analyze", "builtin:S4", "--p", "2"});
  REQUIRE(r.code == 0);
  CHECK(field(r.out, "sylow order", "p = 2") == "8");
  CHECK(field(r.out, "normalizer order", "p = 2") == "8");
  CHECK(field(r.out, "p-nilpotent", "p = 2") == "no");
  CHECK(field(r.out, "sylow quaternion-free", "p = 2") == "yes");
  CHECK(field(r.out, "pn-embed-in-P", "p = 2") == "cond1=yes cond2=yes conclusion=no");
}

TEST_CASE("analyze C6 at 3") {
  auto r = cli({"analyze", "C6", "--p", "3"});
  REQUIRE(r.code == 0);
  CHECK(field(r.out, "nilpotent") == "yes");
  CHECK(field(r.out, "residual N order") == "1");
  CHECK(field(r.out, "p-nilpotent", "p = 3") == "yes");
  CHECK(field(r.out, "residual N_3 order", "p = 3") == "1");
  CHECK(field(r.out, "residual U_3 order", "p = 3") == "1");
}

TEST_CASE("analyze a fixture entry") {
  auto r = cli({"analyze", "file:" + fixtures::path("sg216_153.jsonl") + "#SG216_153", "--p", "3"});
  REQUIRE(r.code == 0);
  CHECK(field(r.out, "normalizer order", "p = 3") == "54");
  CHECK(field(r.out, "ss-embed-in-P", "p = 3") == "cond1=yes cond2=yes conclusion=no");
}

TEST_CASE("analyze jsonl emits one report per prime and variant") {
  auto r = cli({"analyze", "builtin:S4", "--format", "jsonl"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  CHECK(ls.size() == 10);
  for (const auto& l : ls) CHECK(nlohmann::json::parse(l).contains("variant"));
}

TEST_CASE("verify jsonl records parse back") {
  auto r = cli({"verify", "--which", "A,B,asaad,classical,lemmas", "--max-order", "16", "--format", "jsonl", "--quiet"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE_FALSE(ls.empty());
  for (const auto& l : ls) {
    auto rec = CheckRecord::from_json(l);
    CHECK(rec.to_json() == l);
    CHECK_FALSE(rec.wall_ms);
    CHECK(rec.verdict != "violation");
  }
  CHECK(r.err.find("violations: 0") != std::string::npos);
}

TEST_CASE("verify output does not depend on the worker count") {
  const std::vector<std::string> base = {"verify", "--which", "A,B,asaad,classical,lemmas", "--max-order", "40", "--quiet"};
  auto one = base, many = base;
  one.insert(one.end(), {"--jobs", "1"});
  many.insert(many.end(), {"--jobs", "6"});
  auto a = cli(one), b = cli(many);
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify reuses the cache") {
  const auto path = std::filesystem::temp_directory_path() / ("sylowlab_cli_cache_" + std::to_string(::getpid()));
  std::filesystem::remove(path);
  const std::vector<std::string> args = {"verify", "--max-order", "20", "--quiet", "--cache", path.string()};
  auto first = cli(args);
  auto second = cli(args);
  CHECK(first.code == 0);
  CHECK(second.code == 0);
  CHECK(first.out == second.out);
  ResultCache cache(path.string());
  const auto stored = cache.scan().size();
  CHECK(stored > 0);
  cli(args);
  CHECK(cache.scan().size() == stored);
  std::filesystem::remove(path);
}

TEST_CASE("in-P search on a small catalog") {
  auto r = cli({"search-q9", "--max-order", "60", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexamples: 0") != std::string::npos);
  auto f = cli({"search-q9", "--no-builtin", "--catalog", fixtures::path("sg216_153.jsonl"), "--max-order", "216",
                "--quiet", "--format", "jsonl"});
  CHECK(f.code == 0);
  for (const auto& l : lines(f.out)) CHECK(CheckRecord::from_json(l).id == "SG216_153");
}

TEST_CASE("cached verdicts are keyed by tool version") {
  const auto path = std::filesystem::temp_directory_path() / ("sylowlab_cli_version_" + std::to_string(::getpid()));
  const std::vector<std::string> args = {"verify", "--which", "A", "--max-order", "2", "--quiet", "--cache", path.string()};
  for (const char* version : {"sylowlab-0.0.0", ""}) {
    std::filesystem::remove(path);
    {
      ResultCache cache(path.string());
      for (const char* id : {"C1", "C2", "S2"}) {
        CheckRecord planted{id, 2, "ss-embed", "violation", "planted", std::nullopt};
        if (*version) planted.version = version;
        cache.append(planted);
      }
    }
    auto r = cli(args);
    if (*version) {
      CHECK(r.code == 0);
      CHECK(r.out.find("planted") == std::string::npos);
    } else {
      CHECK(r.code == 1);
      CHECK(r.out.find("planted") != std::string::npos);
    }
  }
  std::filesystem::remove(path);
}
