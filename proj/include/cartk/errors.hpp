#ifndef CARTK_ERRORS_HPP
#define CARTK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartk {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 0-based offset of the offending token.
struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Operands built over different rings.
struct ring_mismatch : error {
  using error::error;
};

/// Invalid argument values (bad characteristic, degenerate descriptor, ...).
struct invalid_argument : error {
  using error::error;
};

/// A configured step/pair budget was exhausted; the instance is too large.
struct budget_exceeded : error {
  using error::error;
};

/// A chain or level sum did not stabilize within its budget.
struct stabilization_failure : error {
  using error::error;
};

/// A module/submodule shape outside the supported rank-1 fragment.
struct unsupported_structure : error {
  using error::error;
};

/// Containment precondition violated (N not inside the carrier, ...).
struct not_contained : error {
  using error::error;
};

}  // namespace cartk

#endif
