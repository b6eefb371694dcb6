#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flockgraph/cycle_type.hpp"
#include "flockgraph/permutation.hpp"

namespace flockgraph {

/// True iff phi and psi are conjugate in S_n, i.e. iff they have the same
/// cycle type.
bool are_conjugate(const Permutation& phi, const Permutation& psi);

/// Exact number of solutions rho of rho*phi*rho^-1 = psi for a conjugate
/// pair of this type: product over lengths i of count_i! * i^count_i.
std::uint64_t count_conjugators(const CycleType& t);

/// The complete solution set of rho * phi * rho^-1 = psi, described lazily.
///
/// Cycles of equal length k with multiplicity m contribute m! cycle
/// assignments crossed with k^m rotation offsets.  Enumeration order is
/// fixed: the length classes act as odometer digits with the smallest
/// length varying fastest; within a class, rotation offsets run as a
/// little-endian counter (first cycle fastest) and, once they wrap, the
/// assignment vector advances lexicographically.
///
/// The first element enumerated is base(): identity assignment, zero
/// offsets, i.e. the position-by-position alignment of the canonical cycle
/// lists of phi and psi.
class ConjugatorFamily {
 public:
  ConjugatorFamily(Permutation phi, Permutation psi);

  const Permutation& phi() const { return phi_; }
  const Permutation& psi() const { return psi_; }
  const Permutation& base() const { return base_; }
  std::uint64_t total() const { return total_; }

  /// (multiplicity, length) per distinct cycle length, ascending length.
  std::vector<std::pair<unsigned, unsigned>> length_classes() const;

  /// Single-pass cursor over the solution set.  Not shared across threads
  /// while active; create one per consumer.
  class Cursor {
   public:
    std::optional<Permutation> next();

   private:
    friend class ConjugatorFamily;
    explicit Cursor(const ConjugatorFamily* family);

    Permutation current() const;
    void advance();

    const ConjugatorFamily* family_;
    std::vector<std::vector<unsigned>> assign_;   // per class, image of cycle i
    std::vector<std::vector<unsigned>> offsets_;  // per class, rotation of cycle i
    bool done_ = false;
  };

  Cursor cursor() const { return Cursor(this); }

  /// All solutions in enumeration order.
  std::vector<Permutation> materialize() const;

 private:
  struct LengthClass {
    unsigned length;
    std::vector<std::vector<unsigned>> from;  // phi cycles, min-element order
    std::vector<std::vector<unsigned>> to;    // psi cycles, min-element order
  };

  Permutation phi_;
  Permutation psi_;
  Permutation base_;
  std::vector<LengthClass> classes_;  // ascending length
  std::uint64_t total_ = 0;
};

/// Enumerable solution set of rho*phi*rho^-1 = psi.  Throws DomainError if
/// the pair is not conjugate.
ConjugatorFamily all_conjugators(const Permutation& phi, const Permutation& psi);

/// The distinguished solution beta aligning the canonical cycle lists of
/// phi and psi (both ordered by length then minimum, cycles starting at
/// their minimum).  Equals all_conjugators(phi, psi).base().
Permutation canonical_conjugator(const Permutation& phi, const Permutation& psi);

/// Independent oracle: filter all n! permutations by the defining
/// equation.  Guarded to degree <= 7; throws ResourceError above.
/// Result is sorted by rank.
std::vector<Permutation> brute_force_conjugators(const Permutation& phi,
                                                 const Permutation& psi);

}  // namespace flockgraph
