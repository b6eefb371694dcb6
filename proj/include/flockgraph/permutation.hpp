#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace flockgraph {

// Hard degree cap.  With n <= 20 every n!, flock size and conjugator count
// fits exactly into uint64_t.
inline constexpr unsigned kMaxDegree = 20;

/// A bijection of {1..n}, the value type everything else is built on.
/// Immutable after construction; all operations on it are pure functions,
/// so values can be shared across threads without synchronization.
class Permutation {
 public:
  static Permutation identity(unsigned degree);

  /// Build from the one-line form: image[i] = phi(i+1), values 1..n.
  /// Throws std::invalid_argument unless the sequence is a bijection of
  /// {1..n} with 1 <= n <= kMaxDegree.
  static Permutation from_image(const std::vector<unsigned>& image);

  /// Build from disjoint cycles; elements absent from every cycle become
  /// fixed points.  Throws std::invalid_argument on repeated or
  /// out-of-range elements.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(img_.size()) - 1; }

  /// Apply: x in 1..n.
  unsigned operator()(unsigned x) const { return img_[x]; }

  /// One-line form, image[i] = phi(i+1).  Lexicographic order of this
  /// vector equals rank order.
  std::vector<unsigned> image() const { return {img_.begin() + 1, img_.end()}; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Composition phi*psi applies psi first: (phi*psi)(x) = phi(psi(x)).
  friend Permutation operator*(const Permutation& phi, const Permutation& psi);

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct raw_tag {};
  Permutation(std::vector<unsigned> img, raw_tag) : img_(std::move(img)) {}

  friend Permutation unrank(unsigned degree, std::uint64_t index);
  friend Permutation conjugate(const Permutation& rho, const Permutation& phi);

  std::vector<unsigned> img_;  // img_[0] = 0 sentinel, img_[x] = phi(x)
};

inline Permutation compose(const Permutation& phi, const Permutation& psi) {
  return phi * psi;
}

/// rho * phi * rho^-1, computed in one pass.
Permutation conjugate(const Permutation& rho, const Permutation& phi);

/// Canonical cycle decomposition: every cycle starts at its minimum,
/// cycles ordered by minimum ascending, singletons included.
struct CycleDecomposition {
  std::vector<std::vector<unsigned>> cycles;
};

CycleDecomposition decompose(const Permutation& phi);

/// Parse cycle notation.  Two grammars, selected by the presence of '.':
///   dotted form (degree <= 9):  "(123.45.6.)"  -- digit runs, each cycle
///     terminated by a point, all inside one pair of parentheses;
///   grouped form (any degree):  "(1 2 3)(4 5)(6)" -- space-separated
///     integers, one group per cycle.
/// Elements absent from the text are fixed points.  Throws ParseError.
Permutation parse(std::string_view text, unsigned degree);

/// Inverse of parse: dotted form for degree <= 9, grouped form otherwise.
/// Singleton cycles are always printed.
std::string format(const Permutation& phi);

std::ostream& operator<<(std::ostream& os, const Permutation& phi);

}  // namespace flockgraph
