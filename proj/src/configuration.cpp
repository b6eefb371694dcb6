#include "flockgraph/configuration.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "flockgraph/conjugacy.hpp"
#include "flockgraph/errors.hpp"
#include "flockgraph/ranking.hpp"

namespace flockgraph {

Permutation step(const Permutation& phi, const Permutation& sigma) {
  return conjugate(phi, sigma);  // phi sigma phi^-1
}

OrbitTrace forward_orbit(const Permutation& phi0, const Permutation& sigma) {
  if (phi0.degree() != sigma.degree())
    throw std::invalid_argument("orbit requires equal degrees");
  if (cyclic_type(phi0) != cyclic_type(sigma))
    throw DomainError("start permutation is not in the flock of the stem");

  std::vector<Permutation> seq;
  std::unordered_map<std::uint64_t, std::size_t> position;
  Permutation x = phi0;
  while (true) {
    const auto [it, fresh] = position.try_emplace(rank(x), seq.size());
    if (!fresh) {
      const std::size_t entry = it->second;
      OrbitTrace out{phi0, {}, {}};
      out.tail.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(entry));
      out.cycle.assign(seq.begin() + static_cast<std::ptrdiff_t>(entry), seq.end());
      return out;
    }
    seq.push_back(x);
    x = step(x, sigma);
  }
}

std::vector<Permutation> preimages_in_flock(const Permutation& psi,
                                            const Permutation& sigma) {
  const Partition flock_type = cyclic_type(sigma);
  auto family = all_conjugators(sigma, psi);  // throws DomainError if not conjugate
  std::vector<Permutation> out;
  auto cur = family.cursor();
  while (auto rho = cur.next())
    if (cyclic_type(*rho) == flock_type) out.push_back(std::move(*rho));
  std::sort(out.begin(), out.end());  // one-line lexicographic == rank order
  return out;
}

NodeClass classify(const Permutation& psi, const Permutation& sigma) {
  const auto count = preimages_in_flock(psi, sigma).size();
  NodeKind kind = count == 0   ? NodeKind::Telomere
                  : count == 1 ? NodeKind::Simple
                               : NodeKind::Branching;
  return {kind, count};
}

namespace {

struct DisjointSet {
  std::vector<std::uint32_t> parent;

  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ConfigurationGraph ConfigurationGraph::build(Permutation sigma,
                                             std::vector<std::uint64_t> node_ranks,
                                             unsigned threads) {
  ConfigurationGraph g;
  g.sigma_ = std::move(sigma);
  g.ranks_ = std::move(node_ranks);
  const std::size_t count = g.ranks_.size();
  if (count > kAtlasNodeLimit)
    throw ResourceError("graph of " + std::to_string(count) +
                        " nodes exceeds the limit of " + std::to_string(kAtlasNodeLimit));
  const unsigned n = g.sigma_.degree();

  // successor of each node, parallel over index ranges
  g.succ_.assign(count, 0);
  std::atomic<bool> not_closed{false};
  auto fill_succ = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Permutation succ = step(unrank(n, g.ranks_[i]), g.sigma_);
      const std::uint64_t sr = rank(succ);
      const auto it = std::lower_bound(g.ranks_.begin(), g.ranks_.end(), sr);
      if (it == g.ranks_.end() || *it != sr) {
        not_closed.store(true, std::memory_order_relaxed);
        return;
      }
      g.succ_[i] = static_cast<NodeId>(it - g.ranks_.begin());
    }
  };
  threads = std::clamp(threads, 1u, 64u);
  if (count < 4096) threads = 1;
  if (threads == 1) {
    fill_succ(0, count);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = count / threads * t + std::min<std::size_t>(t, count % threads);
      const std::size_t hi =
          count / threads * (t + 1) + std::min<std::size_t>(t + 1, count % threads);
      workers.emplace_back([&fill_succ, lo, hi] { fill_succ(lo, hi); });
    }
    for (auto& w : workers) w.join();
  }
  if (not_closed.load())
    throw std::logic_error("node set is not closed under the step map");

  // predecessor lists as CSR; filling in ascending i keeps each bucket sorted
  g.pred_off_.assign(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i) ++g.pred_off_[g.succ_[i] + 1];
  for (std::size_t i = 1; i <= count; ++i) g.pred_off_[i] += g.pred_off_[i - 1];
  g.pred_dat_.assign(count, 0);
  {
    std::vector<std::uint32_t> cursor(g.pred_off_.begin(), g.pred_off_.end() - 1);
    for (std::size_t i = 0; i < count; ++i)
      g.pred_dat_[cursor[g.succ_[i]]++] = static_cast<NodeId>(i);
  }

  // peel zero-in-degree nodes; what survives is exactly the cycles
  {
    std::vector<std::uint32_t> indeg(count);
    for (std::size_t i = 0; i < count; ++i)
      indeg[i] = g.pred_off_[i + 1] - g.pred_off_[i];
    std::vector<NodeId> stack;
    for (std::size_t i = 0; i < count; ++i)
      if (indeg[i] == 0) stack.push_back(static_cast<NodeId>(i));
    g.on_cycle_.assign(count, true);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      g.on_cycle_[v] = false;
      const NodeId w = g.succ_[v];
      if (--indeg[w] == 0) stack.push_back(w);
    }
  }

  // weak components, relabeled canonically by (size, smallest member rank)
  {
    DisjointSet dsu(count);
    for (std::size_t i = 0; i < count; ++i)
      dsu.merge(static_cast<std::uint32_t>(i), g.succ_[i]);

    std::unordered_map<std::uint32_t, std::uint32_t> root_index;
    struct Agg {
      NodeId size = 0, cycle_len = 0, telomeres = 0;
      NodeId min_node = 0;
    };
    std::vector<Agg> aggs;
    std::vector<std::uint32_t> raw(count);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint32_t root = dsu.find(static_cast<std::uint32_t>(i));
      auto [it, fresh] = root_index.try_emplace(root, static_cast<std::uint32_t>(aggs.size()));
      if (fresh) aggs.push_back({0, 0, 0, static_cast<NodeId>(i)});
      auto& agg = aggs[it->second];
      ++agg.size;
      if (g.on_cycle_[i]) ++agg.cycle_len;
      if (g.pred_off_[i + 1] == g.pred_off_[i]) ++agg.telomeres;
      raw[i] = it->second;
    }

    std::vector<std::uint32_t> order(aggs.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (aggs[a].size != aggs[b].size) return aggs[a].size < aggs[b].size;
      return aggs[a].min_node < aggs[b].min_node;
    });
    std::vector<std::uint32_t> relabel(aggs.size());
    for (std::uint32_t c = 0; c < order.size(); ++c) relabel[order[c]] = c;

    g.comp_.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) g.comp_[i] = relabel[raw[i]];
    g.comp_info_.resize(aggs.size());
    for (std::uint32_t c = 0; c < order.size(); ++c) {
      const Agg& a = aggs[order[c]];
      g.comp_info_[c] = {a.size, a.cycle_len, a.telomeres, g.ranks_[a.min_node]};
    }

    // nodes per component, CSR, ascending node id inside each bucket
    g.comp_node_off_.assign(aggs.size() + 1, 0);
    for (std::size_t i = 0; i < count; ++i) ++g.comp_node_off_[g.comp_[i] + 1];
    for (std::size_t c = 1; c <= aggs.size(); ++c)
      g.comp_node_off_[c] += g.comp_node_off_[c - 1];
    g.comp_node_dat_.assign(count, 0);
    std::vector<std::uint32_t> cursor(g.comp_node_off_.begin(), g.comp_node_off_.end() - 1);
    for (std::size_t i = 0; i < count; ++i)
      g.comp_node_dat_[cursor[g.comp_[i]]++] = static_cast<NodeId>(i);
  }

  return g;
}

Permutation ConfigurationGraph::node(NodeId id) const {
  return unrank(degree(), ranks_[id]);
}

std::optional<NodeId> ConfigurationGraph::find(const Permutation& phi) const {
  if (phi.degree() != degree()) return std::nullopt;
  const std::uint64_t r = rank(phi);
  const auto it = std::lower_bound(ranks_.begin(), ranks_.end(), r);
  if (it == ranks_.end() || *it != r) return std::nullopt;
  return static_cast<NodeId>(it - ranks_.begin());
}

std::span<const NodeId> ConfigurationGraph::predecessors(NodeId id) const {
  return {pred_dat_.data() + pred_off_[id], pred_dat_.data() + pred_off_[id + 1]};
}

bool ConfigurationGraph::is_telomere(NodeId id) const {
  return pred_off_[id + 1] == pred_off_[id];
}

std::span<const NodeId> ConfigurationGraph::component_nodes(std::uint32_t cid) const {
  return {comp_node_dat_.data() + comp_node_off_[cid],
          comp_node_dat_.data() + comp_node_off_[cid + 1]};
}

std::vector<NodeId> ConfigurationGraph::telomeres() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < ranks_.size(); ++i)
    if (is_telomere(static_cast<NodeId>(i))) out.push_back(static_cast<NodeId>(i));
  return out;
}

ConfigurationGraph build_configuration(const Permutation& phi0, const Permutation& sigma) {
  // Step one: the forward orbit.  Step two: attach in-flock preimages,
  // repeating on every new element until only telomeres remain.
  const OrbitTrace orbit = forward_orbit(phi0, sigma);

  std::deque<Permutation> queue;
  std::unordered_set<std::uint64_t> seen;
  auto push = [&](const Permutation& p) {
    if (seen.insert(rank(p)).second) {
      if (seen.size() > kAtlasNodeLimit)
        throw ResourceError("configuration exceeds the limit of " +
                            std::to_string(kAtlasNodeLimit) + " nodes");
      queue.push_back(p);
    }
  };
  for (const auto& p : orbit.tail) push(p);
  for (const auto& p : orbit.cycle) push(p);

  while (!queue.empty()) {
    const Permutation psi = std::move(queue.front());
    queue.pop_front();
    for (const auto& rho : preimages_in_flock(psi, sigma)) push(rho);
  }

  std::vector<std::uint64_t> ranks(seen.begin(), seen.end());
  std::sort(ranks.begin(), ranks.end());
  return ConfigurationGraph::build(sigma, std::move(ranks));
}

ConfigurationGraph atlas(const Flock& flock, const Permutation& sigma, unsigned threads) {
  if (sigma.degree() != flock.degree() || cyclic_type(sigma) != flock.partition())
    throw DomainError("stem does not belong to the flock");
  if (flock.size() > kAtlasNodeLimit)
    throw ResourceError("flock of " + std::to_string(flock.size()) +
                        " permutations exceeds the atlas limit of " +
                        std::to_string(kAtlasNodeLimit) + " nodes");
  if (flock.degree() > kAtlasDegreeLimit)
    throw ResourceError("atlas enumeration is capped at degree " +
                        std::to_string(kAtlasDegreeLimit));
  return ConfigurationGraph::build(sigma, member_ranks(flock, threads), threads);
}

ConfigurationGraph atlas(const Flock& flock, unsigned threads) {
  return atlas(flock, flock.stem(), threads);
}

std::vector<std::vector<std::uint64_t>> oracle_components(const Flock& flock,
                                                          const Permutation& sigma) {
  if (sigma.degree() != flock.degree() || cyclic_type(sigma) != flock.partition())
    throw DomainError("stem does not belong to the flock");
  if (flock.degree() > 7)
    throw ResourceError("component oracle is capped at degree 7");

  const std::vector<std::uint64_t> ranks = member_ranks(flock);
  const unsigned n = flock.degree();
  DisjointSet dsu(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const std::uint64_t sr = rank(step(unrank(n, ranks[i]), sigma));
    const auto it = std::lower_bound(ranks.begin(), ranks.end(), sr);
    assert(it != ranks.end() && *it == sr);
    dsu.merge(static_cast<std::uint32_t>(i),
              static_cast<std::uint32_t>(it - ranks.begin()));
  }

  std::unordered_map<std::uint32_t, std::size_t> root_index;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const std::uint32_t root = dsu.find(static_cast<std::uint32_t>(i));
    auto [it, fresh] = root_index.try_emplace(root, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(ranks[i]);
  }
  // i ascending makes every bucket sorted; roots are discovered in
  // smallest-rank order, so the outer list is ordered by smallest rank
  return out;
}

std::vector<NodeId> telomere_set(const ConfigurationGraph& graph) {
  return graph.telomeres();
}

TelomereClosureResult check_telomere_closure(const Flock& flock, const Permutation& sigma) {
  const ConfigurationGraph graph = atlas(flock, sigma);
  for (NodeId t : graph.telomeres()) {
    const Permutation image = conjugate(sigma, graph.node(t));
    const auto id = graph.find(image);
    if (!id || !graph.is_telomere(*id)) return {false, graph.node(t)};
  }
  return {true, std::nullopt};
}

}  // namespace flockgraph
