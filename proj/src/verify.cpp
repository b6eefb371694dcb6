#include "flockgraph/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include "flockgraph/configuration.hpp"
#include "flockgraph/conjugacy.hpp"
#include "flockgraph/flock.hpp"
#include "flockgraph/ranking.hpp"

namespace flockgraph {

namespace {

struct Reporter {
  std::ostream& out;
  bool ok = true;
  unsigned checks = 0;

  void report(bool pass, const std::string& what) {
    ++checks;
    if (!pass) ok = false;
    out << (pass ? "ok    " : "FAIL  ") << what << "\n";
  }
};

Permutation random_member(unsigned n, std::mt19937_64& rng) {
  return unrank(n, rng() % factorial(n));
}

// all_conjugators vs the n!-filter oracle, as ordered rank lists
bool solver_matches_oracle(const Permutation& phi, const Permutation& psi) {
  auto enumerated = ConjugatorFamily(phi, psi).materialize();
  std::sort(enumerated.begin(), enumerated.end());
  const auto brute = brute_force_conjugators(phi, psi);
  if (enumerated != brute) return false;
  const auto unique_end = std::unique(enumerated.begin(), enumerated.end());
  if (unique_end != enumerated.end()) return false;
  return enumerated.size() == count_conjugators(type_of(phi));
}

void verify_conjugators(Reporter& rep, unsigned n) {
  if (n <= 4) {
    bool pass = true;
    const std::uint64_t total = factorial(n);
    for (std::uint64_t a = 0; a < total && pass; ++a) {
      const Permutation phi = unrank(n, a);
      for (std::uint64_t b = 0; b < total && pass; ++b) {
        const Permutation psi = unrank(n, b);
        if (!are_conjugate(phi, psi)) {
          if (!brute_force_conjugators(phi, psi).empty()) pass = false;
          continue;
        }
        if (!solver_matches_oracle(phi, psi)) pass = false;
      }
    }
    rep.report(pass, "n=" + std::to_string(n) +
                         " conjugator solver matches brute force on every pair");
  } else {
    std::mt19937_64 rng(1000 + n);
    bool pass = true;
    const unsigned samples = n == 5 ? 200 : 50;
    for (unsigned s = 0; s < samples && pass; ++s) {
      const Permutation phi = random_member(n, rng);
      const Permutation psi = conjugate(random_member(n, rng), phi);
      if (!solver_matches_oracle(phi, psi)) pass = false;
    }
    rep.report(pass, "n=" + std::to_string(n) + " conjugator solver matches brute force on " +
                         std::to_string(samples) + " random conjugate pairs");
  }
}

void verify_counts(Reporter& rep, unsigned n) {
  bool pass = true;
  std::uint64_t members = 0;
  for (const auto& p : partitions_of(n)) {
    const Flock f = flock_of(p, n);
    const std::uint64_t stabilizer = count_conjugators(to_cycle_type(p));
    if (f.size() * stabilizer != factorial(n)) pass = false;
    members += f.size();
  }
  if (members != factorial(n)) pass = false;
  rep.report(pass, "n=" + std::to_string(n) +
                       " orbit-stabilizer: flock size x conjugator count = n! "
                       "for every partition, sizes sum to n!");
}

void verify_components(Reporter& rep, unsigned n) {
  bool atlas_pass = true;
  bool config_pass = true;
  std::mt19937_64 rng(2000 + n);
  for (const auto& p : partitions_of(n)) {
    const Flock f = flock_of(p, n);
    const auto oracle = oracle_components(f, f.stem());
    const ConfigurationGraph graph = atlas(f);

    // atlas components vs union-find oracle, as rank-set partitions
    std::set<std::vector<std::uint64_t>> lhs;
    for (std::uint32_t c = 0; c < graph.component_count(); ++c) {
      std::vector<std::uint64_t> ranks;
      for (NodeId v : graph.component_nodes(c)) ranks.push_back(graph.node_rank(v));
      lhs.insert(std::move(ranks));
    }
    std::set<std::vector<std::uint64_t>> rhs(oracle.begin(), oracle.end());
    if (lhs != rhs) atlas_pass = false;

    // the two-step procedure vs the oracle component of its start
    std::map<std::uint64_t, std::size_t> component_of;
    for (std::size_t c = 0; c < oracle.size(); ++c)
      for (std::uint64_t r : oracle[c]) component_of[r] = c;
    std::vector<std::uint64_t> starts;
    if (n <= 5) {
      for (const auto& comp : oracle)
        for (std::uint64_t r : comp) starts.push_back(r);
    } else {
      const auto members = member_ranks(f);
      for (unsigned s = 0; s < 20; ++s)
        starts.push_back(members[rng() % members.size()]);
    }
    for (std::uint64_t start : starts) {
      const ConfigurationGraph built = build_configuration(unrank(n, start), f.stem());
      std::vector<std::uint64_t> ranks;
      for (NodeId v = 0; v < built.node_count(); ++v) ranks.push_back(built.node_rank(v));
      if (ranks != oracle[component_of[start]]) config_pass = false;
    }
  }
  rep.report(atlas_pass, "n=" + std::to_string(n) +
                             " atlas components equal the union-find oracle partition");
  rep.report(config_pass,
             "n=" + std::to_string(n) +
                 " two-step configuration procedure finds exactly its weak component" +
                 (n <= 5 ? " (every start)" : " (sampled starts)"));
}

void verify_telomere_closure(Reporter& rep, unsigned n) {
  bool pass = true;
  for (const auto& p : partitions_of(n))
    if (!check_telomere_closure(flock_of(p, n), stem_permutation(p)).holds) pass = false;
  rep.report(pass, "n=" + std::to_string(n) +
                       " telomere sets closed under conjugation by the stem");
}

void verify_golden_s6(Reporter& rep) {
  const Flock f = flock_of(Partition({6}), 6);
  const ConfigurationGraph graph = atlas(f);
  std::vector<NodeId> sizes;
  for (std::uint32_t c = 0; c < graph.component_count(); ++c)
    sizes.push_back(graph.component(c).size);
  const std::vector<NodeId> expected{2, 6, 10, 18, 42, 42};
  rep.report(sizes == expected,
             "n=6 atlas of the 6-cycle flock has component sizes 2,6,10,18,42,42");
}

}  // namespace

bool run_verification(unsigned max_n, std::ostream& out) {
  if (max_n < 1 || max_n > 7) {
    out << "verification degree must be in 1..7\n";
    return false;
  }
  Reporter rep{out};
  for (unsigned n = 1; n <= max_n; ++n) {
    verify_counts(rep, n);
    verify_conjugators(rep, n);
    verify_components(rep, n);
    verify_telomere_closure(rep, n);
    if (n == 6) verify_golden_s6(rep);
  }
  out << (rep.ok ? "verification passed (" : "verification FAILED (") << rep.checks
      << " checks)\n";
  return rep.ok;
}

}  // namespace flockgraph
