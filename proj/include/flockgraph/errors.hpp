#pragma once

#include <stdexcept>

namespace flockgraph {

// Input text that does not match the cycle-notation grammar, or an
// out-of-range degree coming from user input.  CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid values that violate a mathematical precondition,
// e.g. conjugating across different cycle types.  CLI exit code 3.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requests that exceed a hard resource guard.  CLI exit code 4.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace flockgraph
