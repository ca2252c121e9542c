#pragma once

#include <cstdint>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace sylowlab {

std::string tool_version();

/// One verified (group, prime, check) outcome, stored one JSON object per line.
struct CheckRecord {
  std::string id;
  std::uint64_t prime = 0;
  std::string check;
  std::string verdict;  // pass | violation | n/a | counterexample | skipped
  std::string witness;
  std::optional<double> wall_ms;
  std::string version = tool_version();

  /// Wall time is written only when present.
  std::string to_json() const;
  /// Throws std::invalid_argument on malformed input.
  static CheckRecord from_json(const std::string& line);
  bool operator==(const CheckRecord&) const = default;
};

struct CacheFilter {
  std::string id_prefix;
  std::optional<std::uint64_t> prime;
  std::optional<std::string> check;
  bool matches(const CheckRecord& r) const;
};

/// Append-only line-delimited record store. Appends go through one mutex and
/// are flushed per record; scans reopen the file and ignore a torn final line.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  const std::string& path() const { return path_; }
  void append(const CheckRecord& record);
  std::vector<CheckRecord> scan(const CacheFilter& filter = {}) const;
  /// Lines that failed to parse during the last scan.
  std::size_t corrupt_lines() const { return corrupt_; }

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::ofstream out_;
  mutable std::size_t corrupt_ = 0;
};

/// $SYLOWLAB_CACHE, if set and non-empty.
std::optional<std::string> default_cache_path();

}  // namespace sylowlab
