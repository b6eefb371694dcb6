#include "flockgraph/cycle_type.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flockgraph {

CycleType::CycleType(std::vector<unsigned> counts) : counts_(std::move(counts)) {
  const unsigned n = static_cast<unsigned>(counts_.size());
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("cycle type must have 1..20 count entries");
  unsigned long long weighted = 0;
  for (unsigned i = 0; i < n; ++i) weighted += static_cast<unsigned long long>(i + 1) * counts_[i];
  if (weighted != n)
    throw std::invalid_argument("cycle counts do not weigh up to the degree");
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  unsigned prev = 0;
  for (unsigned p : parts_) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
    if (p < prev) throw std::invalid_argument("partition parts must be non-decreasing");
    prev = p;
    sum_ += p;
  }
  if (sum_ > kMaxDegree)
    throw std::invalid_argument("partition sums beyond the degree cap " +
                                std::to_string(kMaxDegree));
}

CycleType type_of(const Permutation& phi) {
  const unsigned n = phi.degree();
  std::vector<unsigned> counts(n, 0);
  for (const auto& cycle : decompose(phi).cycles) ++counts[cycle.size() - 1];
  return CycleType(std::move(counts));
}

Partition cyclic_type(const Permutation& phi) { return to_partition(type_of(phi)); }

Partition to_partition(const CycleType& t) {
  std::vector<unsigned> parts;
  for (unsigned len = 1; len <= t.degree(); ++len)
    for (unsigned c = 0; c < t.count(len); ++c) parts.push_back(len);
  return Partition(std::move(parts));
}

CycleType to_cycle_type(const Partition& p) {
  std::vector<unsigned> counts(p.sum(), 0);
  for (unsigned part : p.parts()) ++counts[part - 1];
  return CycleType(std::move(counts));
}

std::vector<Partition> partitions_of(unsigned n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("partitions_of degree must be in 1.." +
                                std::to_string(kMaxDegree));
  std::vector<Partition> out;
  std::vector<unsigned> parts;
  // Non-decreasing parts, smallest first part first: lexicographic order.
  auto emit = [&](auto&& self, unsigned remaining, unsigned min_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (unsigned p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  emit(emit, n, 1);
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << '+';
    os << p.parts()[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << to_string(p);
}

}  // namespace flockgraph
