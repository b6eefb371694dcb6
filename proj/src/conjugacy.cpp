#include "flockgraph/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

#include "flockgraph/errors.hpp"
#include "flockgraph/ranking.hpp"

namespace flockgraph {

bool are_conjugate(const Permutation& phi, const Permutation& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("conjugacy test requires equal degrees");
  return type_of(phi) == type_of(psi);
}

std::uint64_t count_conjugators(const CycleType& t) {
  std::uint64_t total = 1;
  for (unsigned len = 1; len <= t.degree(); ++len) {
    const unsigned m = t.count(len);
    for (unsigned j = 1; j <= m; ++j) {
      if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(j), &total))
        throw std::overflow_error("conjugator count exceeds 64 bits");
      if (len > 1 && __builtin_mul_overflow(total, static_cast<std::uint64_t>(len), &total))
        throw std::overflow_error("conjugator count exceeds 64 bits");
    }
  }
  return total;
}

namespace {

// Cycles grouped by length ascending; within a class the canonical
// min-element order of decompose() is preserved.
std::vector<std::vector<std::vector<unsigned>>> group_by_length(const Permutation& p) {
  const unsigned n = p.degree();
  std::vector<std::vector<std::vector<unsigned>>> by_len(n + 1);
  for (auto& cycle : decompose(p).cycles) {
    const auto len = cycle.size();
    by_len[len].push_back(std::move(cycle));
  }
  return by_len;
}

}  // namespace

ConjugatorFamily::ConjugatorFamily(Permutation phi, Permutation psi)
    : phi_(std::move(phi)), psi_(std::move(psi)), base_(Permutation::identity(phi_.degree())) {
  if (!are_conjugate(phi_, psi_))
    throw DomainError("not conjugate: the two permutations have different cycle types");
  auto from = group_by_length(phi_);
  auto to = group_by_length(psi_);
  for (unsigned len = 1; len < from.size(); ++len) {
    if (from[len].empty()) continue;
    classes_.push_back({len, std::move(from[len]), std::move(to[len])});
  }
  total_ = count_conjugators(type_of(phi_));

  // identity assignment, zero offsets: the canonical alignment
  std::vector<unsigned> img(phi_.degree(), 0);
  for (const auto& cls : classes_)
    for (std::size_t i = 0; i < cls.from.size(); ++i)
      for (std::size_t j = 0; j < cls.length; ++j)
        img[cls.from[i][j] - 1] = cls.to[i][j];
  base_ = Permutation::from_image(img);
}

std::vector<std::pair<unsigned, unsigned>> ConjugatorFamily::length_classes() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  out.reserve(classes_.size());
  for (const auto& cls : classes_)
    out.emplace_back(static_cast<unsigned>(cls.from.size()), cls.length);
  return out;
}

ConjugatorFamily::Cursor::Cursor(const ConjugatorFamily* family) : family_(family) {
  for (const auto& cls : family_->classes_) {
    std::vector<unsigned> assign(cls.from.size());
    for (unsigned i = 0; i < assign.size(); ++i) assign[i] = i;
    assign_.push_back(std::move(assign));
    offsets_.emplace_back(cls.from.size(), 0);
  }
}

Permutation ConjugatorFamily::Cursor::current() const {
  std::vector<unsigned> img(family_->phi_.degree(), 0);
  for (std::size_t c = 0; c < family_->classes_.size(); ++c) {
    const auto& cls = family_->classes_[c];
    const unsigned k = cls.length;
    for (std::size_t i = 0; i < cls.from.size(); ++i) {
      const auto& src = cls.from[i];
      const auto& dst = cls.to[assign_[c][i]];
      const unsigned off = offsets_[c][i];
      for (unsigned j = 0; j < k; ++j) img[src[j] - 1] = dst[(j + off) % k];
    }
  }
  return Permutation::from_image(img);
}

void ConjugatorFamily::Cursor::advance() {
  // Odometer: smallest length class fastest; within a class, rotation
  // offsets as a little-endian counter, then the assignment vector
  // lexicographically.
  for (std::size_t c = 0; c < family_->classes_.size(); ++c) {
    const unsigned k = family_->classes_[c].length;
    for (auto& off : offsets_[c]) {
      if (++off < k) return;
      off = 0;
    }
    if (std::next_permutation(assign_[c].begin(), assign_[c].end())) return;
    // assignment wrapped back to sorted; carry into the next class
  }
  done_ = true;
}

std::optional<Permutation> ConjugatorFamily::Cursor::next() {
  if (done_) return std::nullopt;
  Permutation out = current();
  advance();
  return out;
}

std::vector<Permutation> ConjugatorFamily::materialize() const {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(total_));
  auto cur = cursor();
  while (auto rho = cur.next()) out.push_back(std::move(*rho));
  return out;
}

ConjugatorFamily all_conjugators(const Permutation& phi, const Permutation& psi) {
  return ConjugatorFamily(phi, psi);
}

Permutation canonical_conjugator(const Permutation& phi, const Permutation& psi) {
  return ConjugatorFamily(phi, psi).base();
}

std::vector<Permutation> brute_force_conjugators(const Permutation& phi,
                                                 const Permutation& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("conjugator oracle requires equal degrees");
  const unsigned n = phi.degree();
  if (n > 7)
    throw ResourceError("brute-force conjugator oracle is capped at degree 7");
  std::vector<Permutation> out;
  const std::uint64_t total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    Permutation rho = unrank(n, r);
    if (conjugate(rho, phi) == psi) out.push_back(std::move(rho));
  }
  return out;  // rank order by construction
}

}  // namespace flockgraph
