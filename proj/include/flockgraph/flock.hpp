#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flockgraph/cycle_type.hpp"
#include "flockgraph/permutation.hpp"

namespace flockgraph {

/// A conjugacy class of S_n, identified by its cycle-length partition,
/// carrying its canonical stem and exact size.
class Flock {
 public:
  unsigned degree() const { return degree_; }
  const Partition& partition() const { return partition_; }
  const Permutation& stem() const { return stem_; }
  std::uint64_t size() const { return size_; }

 private:
  Flock(unsigned degree, Partition partition, Permutation stem, std::uint64_t size);
  friend Flock flock_of(const Partition& p, unsigned degree);

  unsigned degree_;
  Partition partition_;
  Permutation stem_;
  std::uint64_t size_;
};

/// The canonical class representative: 1..n in natural order, grouped into
/// cycles of non-decreasing length.  [1,2,2] -> (1.23.45.).
Permutation stem_permutation(const Partition& p);

/// Flock for a partition of `degree`; size is n! / count_conjugators.
Flock flock_of(const Partition& p, unsigned degree);

/// True iff phi has the flock's cyclic type.
bool membership(const Flock& f, const Permutation& phi);

/// Lazy member enumeration in ascending rank order: scan ranks 0..n!-1 and
/// filter by cycle type.  Simple, deterministic, and the oracle any direct
/// generator would be checked against.
class FlockCursor {
 public:
  explicit FlockCursor(const Flock& f);
  std::optional<Permutation> next();

 private:
  std::vector<unsigned> target_;   // cycle counts of the flock's type
  std::vector<unsigned> current_;  // one-line form, advanced lexicographically
  bool done_ = false;
};

inline FlockCursor enumerate_flock(const Flock& f) { return FlockCursor(f); }

/// Ranks of every member, ascending.  threads > 1 splits the rank space
/// into contiguous chunks; the concatenated result is identical to the
/// single-threaded scan.
std::vector<std::uint64_t> member_ranks(const Flock& f, unsigned threads = 1);

}  // namespace flockgraph
