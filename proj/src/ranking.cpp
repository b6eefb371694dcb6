#include "flockgraph/ranking.hpp"

#include <array>
#include <stdexcept>

namespace flockgraph {

namespace {

constexpr std::array<std::uint64_t, kMaxDegree + 1> kFactorial = [] {
  std::array<std::uint64_t, kMaxDegree + 1> f{};
  f[0] = 1;
  for (unsigned k = 1; k <= kMaxDegree; ++k) f[k] = f[k - 1] * k;
  return f;
}();

}  // namespace

std::uint64_t factorial(unsigned k) {
  if (k > kMaxDegree)
    throw std::out_of_range("factorial beyond the degree cap " + std::to_string(kMaxDegree));
  return kFactorial[k];
}

std::uint64_t rank(const Permutation& phi) {
  const unsigned n = phi.degree();
  std::uint64_t r = 0;
  for (unsigned i = 1; i <= n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j <= n; ++j)
      if (phi(j) < phi(i)) ++smaller;
    r += smaller * kFactorial[n - i];
  }
  return r;
}

Permutation unrank(unsigned degree, std::uint64_t index) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::out_of_range("unrank degree must be in 1.." + std::to_string(kMaxDegree));
  if (index >= kFactorial[degree])
    throw std::out_of_range("rank " + std::to_string(index) + " out of range for degree " +
                            std::to_string(degree));
  std::vector<unsigned> avail(degree);
  for (unsigned i = 0; i < degree; ++i) avail[i] = i + 1;
  std::vector<unsigned> img(degree + 1, 0);
  for (unsigned i = 1; i <= degree; ++i) {
    const std::uint64_t f = kFactorial[degree - i];
    const auto d = static_cast<std::size_t>(index / f);
    index %= f;
    img[i] = avail[d];
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(img), Permutation::raw_tag{});
}

}  // namespace flockgraph
