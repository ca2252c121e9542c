#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylowlab/perm_group.hpp"

namespace sylowlab {

/// One group of a catalog. Generators are kept as 1-based image lists, the
/// on-disk form; build() converts to 0-based permutations.
struct CatalogEntry {
  std::string id;
  std::size_t degree = 0;
  std::vector<std::vector<int>> gens;
  std::optional<std::string> name;
  std::string source = "builtin";  // "builtin" or "file:<path>"

  GroupPtr build() const;
};

/// Grammar: S<n>, A<n>, C<n>, D<m> (m even, m >= 4), Q<m> (m divisible by 4)
/// and direct products joined by 'x', e.g. "C2xD8". Throws std::invalid_argument.
CatalogEntry builtin_construct(const std::string& spec);

/// Order a builtin spec would have, without building it.
std::uint64_t builtin_order(const std::string& spec);

/// C n, D 2n, Q 4n (from Q8), S n (from S2), A n (from A3) up to max_order,
/// plus pairwise direct products of those (no trivial factor), sorted by
/// (order, id).
std::vector<CatalogEntry> builtin_catalog(std::uint64_t max_order);

/// One line of the catalog format:
///   {"id":"S3","degree":3,"gens":[[2,3,1],[2,1,3]]}
/// with an optional "name". Throws ParseError.
CatalogEntry parse_catalog_line(const std::string& line, std::size_t line_no = 0);
std::string serialize_catalog_entry(const CatalogEntry& entry);

/// Throws ParseError (with line number) or std::runtime_error on IO failure.
std::vector<CatalogEntry> load_catalog(const std::string& path);

CatalogEntry entry_from_group(const std::string& id, const PermGroup& g);

}  // namespace sylowlab
