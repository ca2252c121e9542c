#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sylowlab {

/// A configured size limit (BSGS order, enumeration, lattice, quotient degree)
/// would be exceeded. Callers treat this as "cannot decide", never as a verdict.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by consumers that need a complete subgroup lattice.
class IncompleteLattice : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed catalog or cache input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Process-wide limits. Set once at startup (the CLI does), read everywhere.
struct Limits {
  std::uint64_t bsgs_order_cap = 10'000'000;
  std::size_t enumeration_cap = 20'000;
  std::size_t lattice_cap = 100'000;
  std::size_t quotient_degree_cap = 4096;
  /// Groups up to this order get a full multiplication table.
  std::size_t table_cap = 2048;
};

Limits& limits();

}  // namespace sylowlab
