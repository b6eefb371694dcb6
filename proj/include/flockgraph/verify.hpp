#pragma once

#include <iosfwd>

namespace flockgraph {

/// Self-verification harness: cross-checks the solvers against their
/// brute-force oracles for every degree up to max_n (<= 7).  Prints one
/// line per check; returns false on any mismatch.
bool run_verification(unsigned max_n, std::ostream& out);

}  // namespace flockgraph
