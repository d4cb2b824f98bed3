#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pturan {

// Search-node budget exhausted. Deliberately distinct from "not found":
// a search that runs out of budget has proven nothing.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the supported size class (canonicalization, enumeration).
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input; offset is the byte position of the problem.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// A construction failed to validate its own contract. Always a bug or a
// broken reconstruction, never recoverable.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pturan
