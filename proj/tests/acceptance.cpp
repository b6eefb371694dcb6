// Acceptance suite: runs every contract check end to end, one line per
// criterion, nonzero exit if any fails.  argv[1] must point at the CLI
// binary (used by the determinism-and-scale criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "flockgraph/configuration.hpp"
#include "flockgraph/conjugacy.hpp"
#include "flockgraph/flock.hpp"
#include "flockgraph/graph_canon.hpp"
#include "flockgraph/ranking.hpp"

using namespace flockgraph;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;

struct Criterion {
  int id;
  std::ostringstream log;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    failed: " << what << "\n";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::set<Permutation> parse_all(std::initializer_list<const char*> texts, unsigned n) {
  std::set<Permutation> out;
  for (const char* t : texts) out.insert(parse(t, n));
  return out;
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) {
  return {v.begin(), v.end()};
}

Permutation random_perm(unsigned n, std::mt19937_64& rng) {
  return unrank(n, rng() % factorial(n));
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[8192];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 1. partition counts and the seven stems of S5; S6 flock sizes sum to 720
void criterion1(Criterion& c) {
  const auto p5 = partitions_of(5);
  c.expect(p5.size() == 7, "partitions_of(5) == 7");
  const std::map<std::vector<unsigned>, std::string> stems = {
      {{5}, "(12345.)"},          {{1, 4}, "(1.2345.)"},
      {{2, 3}, "(12.345.)"},      {{1, 2, 2}, "(1.23.45.)"},
      {{1, 1, 3}, "(1.2.345.)"},  {{1, 1, 1, 2}, "(1.2.3.45.)"},
      {{1, 1, 1, 1, 1}, "(1.2.3.4.5.)"}};
  for (const auto& p : p5) {
    const auto it = stems.find(p.parts());
    c.expect(it != stems.end(), "unexpected partition of 5: " + to_string(p));
    if (it != stems.end())
      c.expect(format(stem_permutation(p)) == it->second,
               "stem of " + to_string(p) + " is " + it->second);
  }
  c.expect(partitions_of(6).size() == 11, "partitions_of(6) == 11");
  std::uint64_t sum = 0;
  for (const auto& p : partitions_of(6)) sum += flock_of(p, 6).size();
  c.expect(sum == 720, "S6 flock sizes sum to 720");
}

// 2. the worked 6-cycle example end to end
void criterion2(Criterion& c) {
  const Permutation sigma = parse("(123456.)", 6);
  const Permutation phi0 = parse("(125634.)", 6);

  const OrbitTrace orbit = forward_orbit(phi0, sigma);
  c.expect(orbit.tail.size() == 1 && orbit.tail[0] == phi0, "orbit tail is [phi0]");
  c.expect(orbit.cycle.size() == 2 && orbit.cycle[0] == parse("(163254.)", 6) &&
               orbit.cycle[1] == parse("(143652.)", 6),
           "orbit cycle is [(163254.), (143652.)]");

  c.expect(as_set(preimages_in_flock(phi0, sigma)) ==
               parse_all({"(125436.)", "(165234.)", "(145632.)"}, 6),
           "preimages of phi0");
  c.expect(as_set(preimages_in_flock(parse("(143652.)", 6), sigma)) ==
               parse_all({"(163254.)", "(145236.)"}, 6),
           "preimages of (143652.)");

  const ConfigurationGraph g = build_configuration(phi0, sigma);
  std::set<Permutation> nodes;
  for (NodeId v = 0; v < g.node_count(); ++v) nodes.insert(g.node(v));
  c.expect(nodes == parse_all({"(125634.)", "(163254.)", "(143652.)", "(125436.)",
                               "(165234.)", "(145632.)", "(145236.)", "(143256.)",
                               "(123654.)", "(163452.)"},
                              6),
           "configuration is the ten listed permutations");
  std::set<Permutation> telomeres;
  for (NodeId t : telomere_set(g)) telomeres.insert(g.node(t));
  c.expect(telomeres == parse_all({"(125436.)", "(165234.)", "(145632.)", "(143256.)",
                                   "(123654.)", "(163452.)"},
                                  6),
           "the six stated telomeres");
}

// 3. atlas of the 6-cycle flock of S6
void criterion3(Criterion& c) {
  const Permutation sigma = parse("(123456.)", 6);
  const Flock f1 = flock_of(Partition({6}), 6);
  const ConfigurationGraph g = atlas(f1);
  c.expect(g.component_count() == 6, "exactly 6 components");
  std::multiset<NodeId> sizes;
  for (std::uint32_t k = 0; k < g.component_count(); ++k) sizes.insert(g.component(k).size);
  c.expect(sizes == std::multiset<NodeId>{2, 6, 10, 18, 42, 42},
           "size multiset {2,6,10,18,42,42}");

  const auto stem_id = g.find(sigma);
  c.expect(stem_id.has_value(), "stem present");
  std::set<Permutation> stem_comp;
  for (NodeId v : g.component_nodes(g.component_of(*stem_id))) stem_comp.insert(g.node(v));
  c.expect(stem_comp == std::set<Permutation>{sigma, sigma.inverse()},
           "component of sigma is {sigma, sigma^-1}");

  c.expect(g.component(g.component_of(*g.find(parse("(125643.)", 6)))).size == 18,
           "component of (125643.) has 18 nodes");
  c.expect(g.component(g.component_of(*g.find(parse("(135624.)", 6)))).size == 42,
           "component of (135624.) has 42 nodes");
  c.expect(g.component(g.component_of(*g.find(parse("(136245.)", 6)))).size == 42,
           "component of (136245.) has 42 nodes");
}

// 4. the isomorphism claim for the two 42-node components
void criterion4(Criterion& c) {
  const ConfigurationGraph g = atlas(flock_of(Partition({6}), 6));
  const std::uint32_t k4 = g.component_of(*g.find(parse("(135624.)", 6)));
  const std::uint32_t k5 = g.component_of(*g.find(parse("(136245.)", 6)));
  c.expect(is_isomorphic(g, k4, g, k5), "K4 and K5 are isomorphic");
  for (std::uint32_t a = 0; a < g.component_count(); ++a)
    for (std::uint32_t b = a + 1; b < g.component_count(); ++b) {
      if ((a == std::min(k4, k5)) && (b == std::max(k4, k5))) continue;
      c.expect(!is_isomorphic(g, a, g, b),
               "components " + std::to_string(a) + "," + std::to_string(b) +
                   " are non-isomorphic");
    }
}

// 5. conjugator solver vs oracle
void criterion5(Criterion& c) {
  for (std::uint64_t a = 0; a < factorial(4); ++a) {
    const Permutation phi = unrank(4, a);
    for (std::uint64_t b = 0; b < factorial(4); ++b) {
      const Permutation psi = unrank(4, b);
      if (!are_conjugate(phi, psi)) continue;
      auto members = all_conjugators(phi, psi).materialize();
      const bool count_ok = members.size() == count_conjugators(type_of(phi));
      std::sort(members.begin(), members.end());
      if (!count_ok || members != brute_force_conjugators(phi, psi)) {
        c.expect(false, "S4 pair " + format(phi) + ", " + format(psi));
        return;
      }
    }
  }
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation phi = random_perm(5, rng);
    const Permutation psi = conjugate(random_perm(5, rng), phi);
    auto members = all_conjugators(phi, psi).materialize();
    const bool count_ok = members.size() == count_conjugators(type_of(phi));
    std::sort(members.begin(), members.end());
    if (!count_ok || members != brute_force_conjugators(phi, psi)) {
      c.expect(false, "S5 random pair " + format(phi) + ", " + format(psi));
      return;
    }
  }
  for (unsigned n = 1; n <= 7; ++n) {
    std::vector<unsigned> fixed(n, 0);
    fixed[0] = n;
    c.expect(count_conjugators(CycleType(fixed)) == factorial(n), "identity type gives n!");
    std::vector<unsigned> ncycle(n, 0);
    ncycle[n - 1] = 1;
    c.expect(count_conjugators(CycleType(ncycle)) == n, "n-cycle type gives n");
  }
}

// 6. two-step procedure == weak connectivity, all of S5
void criterion6(Criterion& c) {
  for (const auto& p : partitions_of(5)) {
    const Flock f = flock_of(p, 5);
    const auto oracle = oracle_components(f, f.stem());
    std::map<std::uint64_t, std::size_t> component_of;
    for (std::size_t k = 0; k < oracle.size(); ++k)
      for (std::uint64_t r : oracle[k]) component_of[r] = k;
    for (const auto& comp : oracle) {
      for (std::uint64_t start : comp) {
        const ConfigurationGraph g = build_configuration(unrank(5, start), f.stem());
        std::vector<std::uint64_t> ranks;
        for (NodeId v = 0; v < g.node_count(); ++v) ranks.push_back(g.node_rank(v));
        if (ranks != oracle[component_of[start]]) {
          c.expect(false, "start rank " + std::to_string(start) + " in flock " +
                              to_string(p));
          return;
        }
      }
    }
  }
}

// 7. telomere closure for every flock of S5 and S6
void criterion7(Criterion& c) {
  for (unsigned n = 5; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      const auto result = check_telomere_closure(flock_of(p, n), stem_permutation(p));
      c.expect(result.holds, "telomere closure on flock " + to_string(p) + " of S" +
                                 std::to_string(n));
    }
}

// 8. replacement stems keep the size multiset and the iso classes
void criterion8(Criterion& c) {
  const Permutation sigma = parse("(123456.)", 6);
  const Flock f1 = flock_of(Partition({6}), 6);
  const auto signature = [](const ConfigurationGraph& g) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& cls : iso_classes(g)) out.emplace_back(cls.code, cls.components.size());
    return out;
  };
  const ConfigurationGraph base = atlas(f1);
  std::multiset<NodeId> base_sizes;
  for (std::uint32_t k = 0; k < base.component_count(); ++k)
    base_sizes.insert(base.component(k).size);
  const auto base_classes = signature(base);

  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation stem2 = conjugate(random_perm(6, rng), sigma);
    const ConfigurationGraph g = atlas(f1, stem2);
    std::multiset<NodeId> sizes;
    for (std::uint32_t k = 0; k < g.component_count(); ++k) sizes.insert(g.component(k).size);
    c.expect(sizes == base_sizes, "size multiset under stem " + format(stem2));
    c.expect(signature(g) == base_classes, "iso classes under stem " + format(stem2));
  }
}

// 9. orbit-stabilizer for every partition, n = 1..7
void criterion9(Criterion& c) {
  for (unsigned n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      const Flock f = flock_of(p, n);
      c.expect(f.size() * count_conjugators(to_cycle_type(p)) == factorial(n),
               "n! = size * conjugators for " + to_string(p) + " of S" + std::to_string(n));
    }
}

// 10. CLI determinism and scale
void criterion10(Criterion& c) {
  if (g_cli.empty()) {
    c.expect(false, "CLI path missing (pass it as argv[1])");
    return;
  }
  const auto t7 = Clock::now();
  const RunResult one = run_cli("atlas --n 7 --type 7 --members --format json --threads 1");
  const double dt7 = seconds_since(t7);
  c.expect(one.exit_code == 0, "atlas --n 7 --type 7 exits 0");
  c.expect(dt7 < 5.0, "atlas --n 7 --type 7 single-threaded in < 5 s (took " +
                          std::to_string(dt7) + ")");
  const RunResult eight =
      run_cli("atlas --n 7 --type 7 --members --format json --threads 8");
  c.expect(eight.exit_code == 0, "atlas --threads 8 exits 0");
  c.expect(one.output == eight.output, "byte-identical output for --threads 1 and 8");

  const auto t9 = Clock::now();
  const RunResult nine = run_cli("atlas --n 9 --type 9 --format json");
  const double dt9 = seconds_since(t9);
  c.expect(nine.exit_code == 0, "atlas --n 9 --type 9 exits 0");
  c.expect(dt9 < 60.0, "atlas --n 9 --type 9 in < 60 s (took " + std::to_string(dt9) + ")");
  c.expect(nlohmann::ordered_json::parse(nine.output)["totals"]["nodes"] == 40320,
           "the 9-cycle flock has 40320 members");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];

  struct Entry {
    int id;
    void (*fn)(Criterion&);
    double budget_seconds;
    const char* what;
  };
  const Entry entries[] = {
      {1, criterion1, 1.0, "partition and flock counts, Example-1 stems"},
      {2, criterion2, 1.0, "worked 6-cycle configuration end to end"},
      {3, criterion3, 2.0, "atlas of the 6-cycle flock of S6"},
      {4, criterion4, 1.0, "isomorphism of the two 42-node components"},
      {5, criterion5, 30.0, "conjugator solver vs brute-force oracle"},
      {6, criterion6, 30.0, "two-step procedure equals weak connectivity on S5"},
      {7, criterion7, 60.0, "telomere closure on every flock of S5 and S6"},
      {8, criterion8, 10.0, "stem invariance of the S6 atlas"},
      {9, criterion9, 1.0, "orbit-stabilizer consistency, n = 1..7"},
      {10, criterion10, 120.0, "CLI determinism and scale"},
  };

  bool all_ok = true;
  for (const Entry& e : entries) {
    Criterion c{e.id, {}, true};
    const auto t0 = Clock::now();
    e.fn(c);
    const double dt = seconds_since(t0);
    if (dt >= e.budget_seconds) {
      c.ok = false;
      c.log << "    failed: exceeded " << e.budget_seconds << " s budget\n";
    }
    std::printf("criterion %2d: %s  (%.2f s)  %s\n", e.id, c.ok ? "PASS" : "FAIL", dt,
                e.what);
    std::fputs(c.log.str().c_str(), stdout);
    all_ok = all_ok && c.ok;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return all_ok ? 0 : 1;
}
