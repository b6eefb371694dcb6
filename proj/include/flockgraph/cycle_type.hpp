#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flockgraph/permutation.hpp"

namespace flockgraph {

/// Cycle counts by length: count(i) = number of cycles of length i.
/// Always holds sum over i of i*count(i) == degree.
class CycleType {
 public:
  explicit CycleType(std::vector<unsigned> counts);

  unsigned degree() const { return static_cast<unsigned>(counts_.size()); }
  unsigned count(unsigned length) const { return counts_[length - 1]; }
  const std::vector<unsigned>& counts() const { return counts_; }

  bool operator==(const CycleType&) const = default;

 private:
  std::vector<unsigned> counts_;  // counts_[i-1] = cycles of length i
};

/// The sorted cycle lengths [k1 <= k2 <= ... <= kr], an integer partition
/// of the degree.  Same data as CycleType, multiset-of-lengths view.
class Partition {
 public:
  explicit Partition(std::vector<unsigned> parts);

  unsigned sum() const { return sum_; }
  const std::vector<unsigned>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<unsigned> parts_;  // non-decreasing, positive
  unsigned sum_ = 0;
};

CycleType type_of(const Permutation& phi);
Partition cyclic_type(const Permutation& phi);

Partition to_partition(const CycleType& t);
CycleType to_cycle_type(const Partition& p);

/// All partitions of n in lexicographic order of the non-decreasing part
/// lists: [1,1,...,1] first, [n] last.
std::vector<Partition> partitions_of(unsigned n);

/// "1+2+2" display form.
std::string to_string(const Partition& p);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace flockgraph
