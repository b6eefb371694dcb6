#include "flockgraph/flock.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "flockgraph/conjugacy.hpp"
#include "flockgraph/ranking.hpp"

namespace flockgraph {

Flock::Flock(unsigned degree, Partition partition, Permutation stem, std::uint64_t size)
    : degree_(degree), partition_(std::move(partition)), stem_(std::move(stem)), size_(size) {}

Permutation stem_permutation(const Partition& p) {
  std::vector<std::vector<unsigned>> cycles;
  unsigned next = 1;
  for (unsigned len : p.parts()) {
    std::vector<unsigned> cycle(len);
    for (unsigned j = 0; j < len; ++j) cycle[j] = next++;
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(p.sum(), cycles);
}

Flock flock_of(const Partition& p, unsigned degree) {
  if (p.sum() != degree)
    throw std::invalid_argument("partition sums to " + std::to_string(p.sum()) +
                                ", not the degree " + std::to_string(degree));
  const std::uint64_t stabilizer = count_conjugators(to_cycle_type(p));
  const std::uint64_t size = factorial(degree) / stabilizer;  // orbit-stabilizer
  return Flock(degree, p, stem_permutation(p), size);
}

bool membership(const Flock& f, const Permutation& phi) {
  if (phi.degree() != f.degree())
    throw std::invalid_argument("membership test requires equal degrees");
  return cyclic_type(phi) == f.partition();
}

namespace {

// Cycle counts of a one-line image, compared against a target type.
bool matches_type(const std::vector<unsigned>& one_line,
                  const std::vector<unsigned>& target_counts) {
  const unsigned n = static_cast<unsigned>(one_line.size());
  unsigned counts[kMaxDegree] = {0};
  bool seen[kMaxDegree + 1] = {false};
  for (unsigned start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    unsigned x = start;
    do {
      seen[x] = true;
      ++len;
      x = one_line[x - 1];
    } while (x != start);
    ++counts[len - 1];
  }
  for (unsigned i = 0; i < n; ++i)
    if (counts[i] != target_counts[i]) return false;
  return true;
}

}  // namespace

FlockCursor::FlockCursor(const Flock& f)
    : target_(to_cycle_type(f.partition()).counts()),
      current_(Permutation::identity(f.degree()).image()) {}

std::optional<Permutation> FlockCursor::next() {
  while (!done_) {
    const bool hit = matches_type(current_, target_);
    std::optional<Permutation> out;
    if (hit) out = Permutation::from_image(current_);
    if (!std::next_permutation(current_.begin(), current_.end())) done_ = true;
    if (out) return out;
  }
  return std::nullopt;
}

namespace {

void scan_ranks(unsigned degree, const std::vector<unsigned>& target,
                std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
  std::vector<unsigned> cur = unrank(degree, lo).image();
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (matches_type(cur, target)) out.push_back(r);
    std::next_permutation(cur.begin(), cur.end());
  }
}

}  // namespace

std::vector<std::uint64_t> member_ranks(const Flock& f, unsigned threads) {
  const unsigned n = f.degree();
  const std::uint64_t total = factorial(n);
  const auto target = to_cycle_type(f.partition()).counts();

  threads = std::clamp(threads, 1u, 64u);
  if (total < 10'000) threads = 1;

  if (threads == 1) {
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(f.size()));
    scan_ranks(n, target, 0, total, out);
    return out;
  }

  std::vector<std::vector<std::uint64_t>> chunks(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
    const std::uint64_t hi =
        total / threads * (t + 1) + std::min<std::uint64_t>(t + 1, total % threads);
    workers.emplace_back(
        [&, t, lo, hi] { scan_ranks(n, target, lo, hi, chunks[t]); });
  }
  for (auto& w : workers) w.join();

  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(f.size()));
  for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace flockgraph
