#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <unistd.h>

#include "oracles.hpp"
#include "sylowlab/cache.hpp"
#include "sylowlab/errors.hpp"
#include "sylowlab/structure.hpp"

using namespace sylowlab;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& stem) {
    path = fs::temp_directory_path() / ("sylowlab_" + stem + "_" + std::to_string(::getpid()) + ".jsonl");
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
  void write(const std::string& text) const { std::ofstream(path, std::ios::binary) << text; }
};

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_catalog_line(text, 7);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("builtin constructions have the expected orders") {
  const std::vector<std::pair<const char*, std::uint64_t>> cases = {
      {"C1", 1}, {"C12", 12}, {"S4", 24}, {"S5", 120}, {"A4", 12}, {"A5", 60}, {"D4", 4}, {"D12", 12},
      {"Q8", 8}, {"Q16", 16}, {"C2xD8", 16}, {"S3xS3", 36}, {"C2xC2xC2", 8}, {"A4xC3", 36}};
  for (const auto& [spec, order] : cases) {
    CHECK_MESSAGE(builtin_order(spec) == order, spec);
    CHECK_MESSAGE(builtin_construct(spec).build()->order() == order, spec);
  }
  CHECK(is_quaternion8(whole_group(fixtures::builtin("Q8"))));
  CHECK_FALSE(is_abelian(whole_group(fixtures::builtin("D8"))));
  CHECK(is_abelian(whole_group(fixtures::builtin("D4"))));
  CHECK(center(whole_group(fixtures::builtin("Q16"))).order() == 2);
}

TEST_CASE("builtin grammar errors") {
  for (const char* bad : {"", "X4", "C", "C0", "D6x", "D7", "D2", "Q6", "S4y", "C4096000", "c4"})
    CHECK_THROWS_AS(builtin_construct(bad), std::invalid_argument);
  CHECK_THROWS_AS(builtin_construct("C5000"), std::invalid_argument);
}

TEST_CASE("builtin catalog contents") {
  auto one = builtin_catalog(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].build()->order() == 1);
  CHECK_THROWS_AS(builtin_catalog(0), std::invalid_argument);

  for (std::uint64_t bound : {10, 60}) {
    auto cat = builtin_catalog(bound);
    std::set<std::string> ids;
    std::uint64_t last = 0;
    for (const auto& e : cat) {
      CHECK(ids.insert(e.id).second);
      const auto order = e.build()->order();
      CHECK(order <= bound);
      CHECK(order >= last);
      CHECK(builtin_order(e.id) == order);
      CHECK(e.source == "builtin");
      last = order;
    }
    for (const char* must : {"C1", "C2", "S3", "D8", "Q8", "C2xC2", "C10"}) CHECK(ids.count(must));
    if (bound == 60)
      for (const char* must : {"A5", "S4", "C3xS3", "C2xA4", "C3xQ8"}) CHECK(ids.count(must));
  }
}

TEST_CASE("catalog lines parse and round trip") {
  auto e = parse_catalog_line(R"({"id":"S3","degree":3,"gens":[[2,3,1],[2,1,3]]})");
  CHECK(e.id == "S3");
  CHECK(e.degree == 3);
  CHECK_FALSE(e.name);
  CHECK(e.build()->order() == 6);
  CHECK(serialize_catalog_entry(e) == R"({"id":"S3","degree":3,"gens":[[2,3,1],[2,1,3]]})");

  for (const auto& entry : builtin_catalog(30)) {
    auto back = parse_catalog_line(serialize_catalog_entry(entry));
    CHECK(back.id == entry.id);
    CHECK(back.gens == entry.gens);
    CHECK(back.build()->order() == entry.build()->order());
  }
  auto g = fixtures::builtin("D10");
  auto from = entry_from_group("dih", *g);
  CHECK(from.build()->order() == 10);
}

TEST_CASE("catalog line errors carry the line number") {
  for (const char* bad : {
           R"({"id":"x","degree":3,"gens":[[1,1,2]]})",
           R"({"id":"x","degree":3,"gens":[[1,2]]})",
           R"({"id":"x","degree":3,"gens":[[0,1,2]]})",
           R"({"id":"x","degree":0,"gens":[]})",
           R"({"id":"x","degree":3,"gens":[[1,2,3]],"extra":1})",
           R"({"degree":3,"gens":[]})",
           R"({"id":"","degree":3,"gens":[]})",
           R"({"id":"x","degree":3,"gens":[[1,2,"3"]]})",
           R"([1,2,3])",
           R"({"id":"x",)",
       })
    CHECK_MESSAGE(parse_error_line(bad) == 7, bad);
}

TEST_CASE("catalog files") {
  TempFile f("catalog");
  f.write("{\"id\":\"S3\",\"degree\":3,\"gens\":[[2,3,1],[2,1,3]]}\r\n\n{\"id\":\"C2\",\"degree\":2,\"gens\":[[2,1]],\"name\":\"c2\"}\n");
  auto cat = load_catalog(f.path.string());
  REQUIRE(cat.size() == 2);
  CHECK(cat[1].name == std::optional<std::string>("c2"));
  CHECK(cat[0].source == "file:" + f.path.string());

  f.write("{\"id\":\"S3\",\"degree\":3,\"gens\":[[2,3,1]]}\n{\"id\":\"S3\",\"degree\":3,\"gens\":[[2,1,3]]}\n");
  try {
    load_catalog(f.path.string());
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  f.write("{\"id\":\"a\",\"degree\":2,\"gens\":[[2,1]]}\n\n{\"id\":\"b\",\"degree\":2,\"gens\":[[2,2]]}\n");
  try {
    load_catalog(f.path.string());
    FAIL("non-bijection accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.jsonl"), std::runtime_error);
}

TEST_CASE("affine fixture") {
  auto g = whole_group(fixtures::load("sg216_153.jsonl"));
  CHECK(g.order() == 216);
  CHECK(is_solvable(g));
  CHECK(g.parent().degree() == 9);
  const Subgroup p = sylow_subgroup(g, 3);
  CHECK(p.order() == 27);
  CHECK(exponent(p) == 3);
  CHECK(center(g).is_trivial());
  CHECK(normalizer(g, p).order() == 54);
  auto normals = normal_subgroups(g);
  std::vector<std::uint64_t> orders;
  for (const auto& n : *normals) orders.push_back(n.order());
  CHECK(orders == std::vector<std::uint64_t>{1, 9, 18, 72, 216});
  CHECK(residual(g, FormationTag::p_supersolvable(3)).order() == 9);
}

TEST_CASE("SL(2,3) fixture") {
  auto g = whole_group(fixtures::load("sl23.jsonl"));
  CHECK(g.order() == 24);
  CHECK(cyclic_subgroups_of_order(g, 2).size() == 1);
  CHECK_FALSE(is_p_supersolvable(g, 2));
  CHECK(is_minimal_non_p_supersolvable(g, 2));
  const Subgroup r = residual(g, FormationTag::p_supersolvable(2));
  CHECK(is_quaternion8(r));
  CHECK_FALSE(is_quaternion_free(sylow_subgroup(g, 2)));
}

TEST_CASE("result cache") {
  TempFile f("cache");
  CheckRecord a{"S3", 2, "ss-embed", "pass", "", std::nullopt};
  CheckRecord b{"S4", 2, "pn-embed", "violation", "x=(1,2)", 1.5};
  CheckRecord c{"S4", 3, "min-residual", "n/a", "", std::nullopt};
  {
    ResultCache cache(f.path.string());
    CHECK(cache.scan().empty());
    cache.append(a);
    cache.append(b);
    cache.append(c);
    auto all = cache.scan();
    REQUIRE(all.size() == 3);
    CHECK(all[1] == b);
    CHECK(cache.scan({"S4", std::nullopt, std::nullopt}).size() == 2);
    CHECK(cache.scan({"", 3, std::nullopt}).size() == 1);
    CHECK(cache.scan({"S", 2, "ss-embed"}) == std::vector<CheckRecord>{a});
  }
  CHECK(a.to_json().find("wall_ms") == std::string::npos);
  CHECK(CheckRecord::from_json(b.to_json()) == b);
  CHECK(a.version == tool_version());
  CHECK_THROWS_AS(CheckRecord::from_json("{\"id\":1}"), std::invalid_argument);

  {
    std::ofstream(f.path, std::ios::app) << "not json\n" << R"({"id":"S5","prime":5,"che)";
  }
  ResultCache again(f.path.string());
  CHECK(again.scan().size() == 3);
  CHECK(again.corrupt_lines() == 1);
}

TEST_CASE("records from an older version are kept but distinguishable") {
  TempFile f("version");
  CheckRecord old{"S3", 3, "ss-embed", "pass", "", std::nullopt, "sylowlab-0.0.1"};
  ResultCache cache(f.path.string());
  cache.append(old);
  auto back = cache.scan();
  REQUIRE(back.size() == 1);
  CHECK(back[0].version == "sylowlab-0.0.1");
  CHECK(back[0].version != tool_version());
}
