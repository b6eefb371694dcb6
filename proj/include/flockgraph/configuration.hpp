#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flockgraph/flock.hpp"
#include "flockgraph/permutation.hpp"

namespace flockgraph {

using NodeId = std::uint32_t;

// Guards for whole-flock materialization.
inline constexpr std::uint64_t kAtlasNodeLimit = 20'000'000;
inline constexpr unsigned kAtlasDegreeLimit = 12;

/// One application of the step map T: phi -> phi * sigma * phi^-1.
/// Preserves the cyclic type, so T maps a flock into itself.
Permutation step(const Permutation& phi, const Permutation& sigma);

/// Forward T-orbit of phi0 split at the first repeated element:
/// tail (possibly empty), then the periodic part.
struct OrbitTrace {
  Permutation start;
  std::vector<Permutation> tail;
  std::vector<Permutation> cycle;  // front() is the entry point of the loop

  std::size_t tail_length() const { return tail.size(); }
  std::size_t cycle_length() const { return cycle.size(); }
};

/// Iterate T from phi0 until the first repeat.  Throws DomainError when
/// phi0 is not in the flock of sigma.
OrbitTrace forward_orbit(const Permutation& phi0, const Permutation& sigma);

/// All rho with rho*sigma*rho^-1 = psi and the cyclic type of sigma,
/// sorted by rank.  Throws DomainError when psi is not conjugate to sigma.
std::vector<Permutation> preimages_in_flock(const Permutation& psi,
                                            const Permutation& sigma);

enum class NodeKind { Telomere, Simple, Branching };

struct NodeClass {
  NodeKind kind;
  std::size_t preimage_count;
};

/// Telomere (no in-flock preimage), simple (one), or branching (two+).
NodeClass classify(const Permutation& psi, const Permutation& sigma);

struct ComponentInfo {
  NodeId size = 0;
  NodeId cycle_length = 0;
  NodeId telomere_count = 0;
  std::uint64_t min_rank = 0;  // smallest member rank
};

/// The functional graph of T on a node set closed under T: one
/// configuration or a whole-flock atlas.  Nodes are stored as sorted
/// ranks; a node id is the index into that order, so ids, edges and all
/// derived lists are byte-stable across runs and thread counts.
class ConfigurationGraph {
 public:
  /// Assemble edges, predecessor lists, cycle flags and components for a
  /// sorted, duplicate-free, T-closed set of member ranks.
  static ConfigurationGraph build(Permutation sigma,
                                  std::vector<std::uint64_t> node_ranks,
                                  unsigned threads = 1);

  const Permutation& stem() const { return sigma_; }
  unsigned degree() const { return sigma_.degree(); }

  std::size_t node_count() const { return ranks_.size(); }
  std::uint64_t node_rank(NodeId id) const { return ranks_[id]; }
  Permutation node(NodeId id) const;
  std::optional<NodeId> find(const Permutation& phi) const;

  NodeId successor(NodeId id) const { return succ_[id]; }
  std::span<const NodeId> predecessors(NodeId id) const;
  bool is_telomere(NodeId id) const;
  bool on_cycle(NodeId id) const { return on_cycle_[id]; }

  /// Component ids are canonical: sorted by (size, smallest member rank).
  std::uint32_t component_of(NodeId id) const { return comp_[id]; }
  std::size_t component_count() const { return comp_info_.size(); }
  const ComponentInfo& component(std::uint32_t cid) const { return comp_info_[cid]; }
  std::span<const NodeId> component_nodes(std::uint32_t cid) const;

  /// Zero-in-degree nodes, ascending.
  std::vector<NodeId> telomeres() const;

 private:
  ConfigurationGraph() = default;

  Permutation sigma_ = Permutation::identity(1);
  std::vector<std::uint64_t> ranks_;
  std::vector<NodeId> succ_;
  std::vector<std::uint32_t> pred_off_;  // CSR of predecessor lists
  std::vector<NodeId> pred_dat_;
  std::vector<bool> on_cycle_;
  std::vector<std::uint32_t> comp_;
  std::vector<ComponentInfo> comp_info_;
  std::vector<std::uint32_t> comp_node_off_;  // CSR of nodes per component
  std::vector<NodeId> comp_node_dat_;
};

/// The configuration (weak component) of phi0, found the way the graph is
/// defined: forward orbit first, then repeated in-flock preimage closure.
ConfigurationGraph build_configuration(const Permutation& phi0,
                                       const Permutation& sigma);

/// Functional graph over the whole flock.  sigma may be any member of the
/// flock.  Successor computation parallelizes over rank ranges; the result
/// is identical for every thread count.  Throws ResourceError beyond the
/// node and degree guards.
ConfigurationGraph atlas(const Flock& flock, const Permutation& sigma,
                         unsigned threads = 1);
ConfigurationGraph atlas(const Flock& flock, unsigned threads = 1);

/// Independent component oracle: union-find over the raw edge set
/// {phi -> T(phi)}, no graph assembly.  Components are rank lists,
/// ascending inside, ordered by smallest rank.  Guarded to degree <= 7.
std::vector<std::vector<std::uint64_t>> oracle_components(const Flock& flock,
                                                          const Permutation& sigma);

/// Nodes not preceded by another vertex, ascending.
std::vector<NodeId> telomere_set(const ConfigurationGraph& graph);

struct TelomereClosureResult {
  bool holds;
  std::optional<Permutation> counterexample;  // telomere whose image is not one
};

/// Checks that the telomere set of the flock's atlas is closed under
/// x -> sigma * x * sigma^-1.
TelomereClosureResult check_telomere_closure(const Flock& flock, const Permutation& sigma);

}  // namespace flockgraph
