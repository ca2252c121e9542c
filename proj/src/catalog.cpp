#include "sylowlab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <set>
#include <stdexcept>

namespace sylowlab {

namespace {

struct Factor {
  char kind;
  std::uint64_t n;
};

std::vector<Factor> parse_spec(const std::string& spec) {
  std::vector<Factor> out;
  std::size_t pos = 0;
  while (true) {
    if (pos >= spec.size()) throw std::invalid_argument("malformed group spec '" + spec + "'");
    char kind = spec[pos++];
    if (std::string("SACDQ").find(kind) == std::string::npos)
      throw std::invalid_argument("unknown group family in '" + spec + "'");
    std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start || pos - start > 6) throw std::invalid_argument("malformed group spec '" + spec + "'");
    std::uint64_t n = std::stoull(spec.substr(start, pos - start));
    if (n == 0) throw std::invalid_argument("group parameter must be positive in '" + spec + "'");
    if (kind == 'D' && (n < 4 || n % 2)) throw std::invalid_argument("D<m> needs an even m >= 4");
    if (kind == 'Q' && n % 4) throw std::invalid_argument("Q<m> needs m divisible by 4");
    out.push_back({kind, n});
    if (pos == spec.size()) break;
    if (spec[pos] != 'x') throw std::invalid_argument("malformed group spec '" + spec + "'");
    ++pos;
  }
  return out;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (r > UINT64_MAX / k) return UINT64_MAX;
    r *= k;
  }
  return r;
}

std::uint64_t factor_order(const Factor& f) {
  switch (f.kind) {
    case 'S': return factorial(f.n);
    case 'A': return f.n < 2 ? 1 : factorial(f.n) / 2;
    default: return f.n;
  }
}

using Cycles = std::vector<std::vector<Point>>;

std::vector<int> images_of(std::size_t degree, const Cycles& cycles, std::size_t shift, std::size_t total) {
  Permutation p = Permutation::from_cycles(degree, cycles);
  std::vector<int> img(total);
  for (std::size_t i = 0; i < total; ++i) img[i] = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i < degree; ++i) img[shift + i] = static_cast<int>(shift + p[i]) + 1;
  return img;
}

Cycles cycle_of(std::size_t from, std::size_t to) {
  std::vector<Point> c;
  for (std::size_t i = from; i < to; ++i) c.push_back(static_cast<Point>(i));
  return {c};
}

// Degree of a factor and its generators as cycles on 0..degree-1.
std::pair<std::size_t, std::vector<Cycles>> factor_generators(const Factor& f) {
  const auto n = static_cast<std::size_t>(f.n);
  switch (f.kind) {
    case 'S':
      if (n == 1) return {1, {}};
      if (n == 2) return {2, {{{0, 1}}}};
      return {n, {{{0, 1}}, cycle_of(0, n)}};
    case 'A':
      if (n <= 2) return {n, {}};
      if (n == 3) return {3, {{{0, 1, 2}}}};
      return {n, {{{0, 1, 2}}, n % 2 ? cycle_of(0, n) : cycle_of(1, n)}};
    case 'C':
      if (n == 1) return {1, {}};
      return {n, {cycle_of(0, n)}};
    case 'D': {
      const std::size_t k = n / 2;
      if (k == 2) return {4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}};
      Cycles reflection;
      for (std::size_t i = 1; i < k - i; ++i) reflection.push_back({static_cast<Point>(i), static_cast<Point>(k - i)});
      return {k, {cycle_of(0, k), reflection}};
    }
    case 'Q': {
      // Right regular action of <a, x | a^2m = 1, x^2 = a^m, a^x = a^-1> on
      // the points a^i x^j -> i + 2m*j.
      const std::size_t m = n / 4;
      const std::size_t half = 2 * m;
      std::vector<Point> by_a(n), by_x(n);
      for (std::size_t i = 0; i < half; ++i) {
        by_a[i] = static_cast<Point>((i + 1) % half);
        by_a[half + i] = static_cast<Point>(half + (i + half - 1) % half);
        by_x[i] = static_cast<Point>(half + i);
        by_x[half + i] = static_cast<Point>((i + m) % half);
      }
      auto to_cycles = [&](const std::vector<Point>& img) {
        Cycles cs;
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
          if (seen[i] || img[i] == i) continue;
          std::vector<Point> c;
          for (std::size_t j = i; !seen[j]; j = img[j]) {
            seen[j] = true;
            c.push_back(static_cast<Point>(j));
          }
          cs.push_back(c);
        }
        return cs;
      };
      return {n, {to_cycles(by_a), to_cycles(by_x)}};
    }
  }
  throw std::invalid_argument("unknown group family");
}

}  // namespace

GroupPtr CatalogEntry::build() const {
  std::vector<Permutation> perms;
  for (const auto& img : gens) {
    if (img.size() != degree) throw std::invalid_argument("generator length differs from degree in " + id);
    std::vector<Point> zero_based(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i] < 1 || static_cast<std::size_t>(img[i]) > degree)
        throw std::invalid_argument("image out of range in " + id);
      zero_based[i] = static_cast<Point>(img[i] - 1);
    }
    perms.emplace_back(std::move(zero_based));
  }
  return PermGroup::build(degree, std::move(perms), name.value_or(id));
}

std::uint64_t builtin_order(const std::string& spec) {
  std::uint64_t order = 1;
  for (const auto& f : parse_spec(spec)) {
    std::uint64_t o = factor_order(f);
    order = (o != 0 && order > UINT64_MAX / o) ? UINT64_MAX : order * o;
  }
  return order;
}

CatalogEntry builtin_construct(const std::string& spec) {
  auto factors = parse_spec(spec);
  std::vector<std::pair<std::size_t, std::vector<Cycles>>> parts;
  std::size_t total = 0;
  for (const auto& f : factors) {
    if (f.n > 4096) throw std::invalid_argument("group parameter too large in '" + spec + "'");
    parts.push_back(factor_generators(f));
    total += parts.back().first;
  }
  CatalogEntry entry;
  entry.id = spec;
  entry.degree = total;
  std::size_t shift = 0;
  for (const auto& [deg, gens] : parts) {
    for (const auto& cycles : gens) entry.gens.push_back(images_of(deg, cycles, shift, total));
    shift += deg;
  }
  return entry;
}

std::vector<CatalogEntry> builtin_catalog(std::uint64_t max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
  std::vector<std::string> base;
  for (std::uint64_t n = 1; n <= max_order; ++n) base.push_back("C" + std::to_string(n));
  for (std::uint64_t m = 4; m <= max_order; m += 2) base.push_back("D" + std::to_string(m));
  for (std::uint64_t m = 8; m <= max_order; m += 4) base.push_back("Q" + std::to_string(m));
  for (std::uint64_t n = 2; factorial(n) <= max_order; ++n) base.push_back("S" + std::to_string(n));
  for (std::uint64_t n = 3; factorial(n) / 2 <= max_order; ++n) base.push_back("A" + std::to_string(n));

  std::vector<std::pair<std::uint64_t, std::string>> specs;
  std::set<std::string> seen;
  for (const auto& s : base)
    if (seen.insert(s).second) specs.emplace_back(builtin_order(s), s);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const std::uint64_t oi = builtin_order(base[i]);
    if (oi == 1) continue;
    for (std::size_t j = i; j < base.size(); ++j) {
      const std::uint64_t oj = builtin_order(base[j]);
      if (oj == 1 || oi * oj > max_order) continue;
      std::string s = base[i] + "x" + base[j];
      if (seen.insert(s).second) specs.emplace_back(oi * oj, s);
    }
  }
  std::sort(specs.begin(), specs.end());
  std::vector<CatalogEntry> out;
  out.reserve(specs.size());
  for (const auto& [order, s] : specs) out.push_back(builtin_construct(s));
  return out;
}

CatalogEntry parse_catalog_line(const std::string& line, std::size_t line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(line_no, std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError(line_no, "expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "id" && key != "degree" && key != "gens" && key != "name")
      throw ParseError(line_no, "unknown field '" + key + "'");
  if (!j.contains("id") || !j["id"].is_string()) throw ParseError(line_no, "missing string field 'id'");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned() || j["degree"].get<std::uint64_t>() == 0 ||
      j["degree"].get<std::uint64_t>() > 65535)
    throw ParseError(line_no, "missing or invalid 'degree'");
  if (!j.contains("gens") || !j["gens"].is_array()) throw ParseError(line_no, "missing array field 'gens'");

  CatalogEntry entry;
  entry.id = j["id"].get<std::string>();
  if (entry.id.empty()) throw ParseError(line_no, "empty id");
  entry.degree = j["degree"].get<std::size_t>();
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(line_no, "'name' must be a string");
    entry.name = j["name"].get<std::string>();
  }
  for (const auto& g : j["gens"]) {
    if (!g.is_array() || g.size() != entry.degree)
      throw ParseError(line_no, "generator must be an image list of length " + std::to_string(entry.degree));
    std::vector<int> img;
    std::vector<bool> hit(entry.degree + 1, false);
    for (const auto& v : g) {
      if (!v.is_number_integer()) throw ParseError(line_no, "images must be integers");
      auto x = v.get<long long>();
      if (x < 1 || static_cast<std::size_t>(x) > entry.degree || hit[static_cast<std::size_t>(x)])
        throw ParseError(line_no, "image list is not a bijection on 1.." + std::to_string(entry.degree));
      hit[static_cast<std::size_t>(x)] = true;
      img.push_back(static_cast<int>(x));
    }
    entry.gens.push_back(std::move(img));
  }
  return entry;
}

std::string serialize_catalog_entry(const CatalogEntry& entry) {
  nlohmann::ordered_json j;
  j["id"] = entry.id;
  j["degree"] = entry.degree;
  j["gens"] = entry.gens;
  if (entry.name) j["name"] = *entry.name;
  return j.dump();
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file '" + path + "'");
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    CatalogEntry e = parse_catalog_line(line, line_no);
    if (!ids.insert(e.id).second) throw ParseError(line_no, "duplicate id '" + e.id + "'");
    e.source = "file:" + path;
    out.push_back(std::move(e));
  }
  return out;
}

CatalogEntry entry_from_group(const std::string& id, const PermGroup& g) {
  CatalogEntry e;
  e.id = id;
  e.degree = g.degree();
  for (const auto& p : g.generators()) e.gens.push_back(p.one_based());
  if (!g.name().empty() && g.name() != id) e.name = g.name();
  return e;
}

}  // namespace sylowlab
