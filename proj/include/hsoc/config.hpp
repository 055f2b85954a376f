#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsoc {

// Tunable limits for the enumerative operations.  Everything that walks an
// exponential search space takes one of these and refuses to run past the
// caps instead of running unbounded.
struct RunConfig {
  std::uint64_t cap_words  = std::uint64_t{1} << 26;  // codeword / weight enumerations
  std::uint64_t cap_points = 100000000;               // projective point enumeration
  int           cap_subset = 8;                       // column-subset search depth
  unsigned      workers    = 0;                       // 0 = hardware concurrency
  std::uint64_t seed       = 0x9e3779b97f4a7c15ull;   // reserved for sampling front ends
};

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed input files or element expressions
struct parse_error : error {
  explicit parse_error(const std::string& what, std::size_t line_no = 0)
      : error(line_no ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
  std::size_t line = 0;
};

// an enumeration would exceed the configured cap
struct cap_exceeded : error {
  using error::error;
};

// an internal cross-check failed; indicates a bug rather than bad input
struct verify_error : error {
  using error::error;
};

}  // namespace hsoc
