#include "sylowlab/cache.hpp"

#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <stdexcept>

namespace sylowlab {

std::string tool_version() { return std::string("sylowlab-") + SYLOWLAB_VERSION; }

std::string CheckRecord::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["prime"] = prime;
  j["check"] = check;
  j["verdict"] = verdict;
  j["witness"] = witness;
  if (wall_ms) j["wall_ms"] = *wall_ms;
  j["version"] = version;
  return j.dump();
}

CheckRecord CheckRecord::from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(ex.what());
  }
  if (!j.is_object()) throw std::invalid_argument("record is not an object");
  auto str = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw std::invalid_argument(std::string("missing field ") + key);
    return j[key].get<std::string>();
  };
  CheckRecord r;
  r.id = str("id");
  if (!j.contains("prime") || !j["prime"].is_number_unsigned()) throw std::invalid_argument("missing field prime");
  r.prime = j["prime"].get<std::uint64_t>();
  r.check = str("check");
  r.verdict = str("verdict");
  r.witness = str("witness");
  r.version = str("version");
  if (j.contains("wall_ms")) {
    if (!j["wall_ms"].is_number()) throw std::invalid_argument("wall_ms must be a number");
    r.wall_ms = j["wall_ms"].get<double>();
  }
  return r;
}

bool CacheFilter::matches(const CheckRecord& r) const {
  if (r.id.compare(0, id_prefix.size(), id_prefix) != 0) return false;
  if (prime && r.prime != *prime) return false;
  if (check && r.check != *check) return false;
  return true;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  out_.open(path_, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open cache file '" + path_ + "' for appending");
}

void ResultCache::append(const CheckRecord& record) {
  std::string line = record.to_json();
  std::lock_guard lock(mutex_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw std::runtime_error("write to cache file '" + path_ + "' failed");
}

std::vector<CheckRecord> ResultCache::scan(const CacheFilter& filter) const {
  std::ifstream in(path_);
  std::vector<CheckRecord> out;
  std::size_t corrupt = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const bool torn_tail = in.eof();
    try {
      CheckRecord r = CheckRecord::from_json(line);
      if (filter.matches(r)) out.push_back(std::move(r));
    } catch (const std::invalid_argument&) {
      if (torn_tail) continue;
      ++corrupt;
    }
  }
  std::lock_guard lock(mutex_);
  corrupt_ = corrupt;
  if (corrupt) std::cerr << "warning: skipped " << corrupt << " corrupt line(s) in cache " << path_ << '\n';
  return out;
}

std::optional<std::string> default_cache_path() {
  const char* env = std::getenv("SYLOWLAB_CACHE");
  if (!env || !*env) return std::nullopt;
  return std::string(env);
}

}  // namespace sylowlab
