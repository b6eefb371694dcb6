#pragma once

#include <cstdint>

#include "flockgraph/permutation.hpp"

namespace flockgraph {

/// k! for k <= kMaxDegree; throws std::out_of_range above that.
std::uint64_t factorial(unsigned k);

/// Lexicographic (Lehmer) index of phi within S_n, in [0, n!).
/// rank(identity) == 0; rank order equals one-line lexicographic order.
std::uint64_t rank(const Permutation& phi);

/// Inverse of rank.  Throws std::out_of_range if index >= degree!.
Permutation unrank(unsigned degree, std::uint64_t index);

}  // namespace flockgraph
