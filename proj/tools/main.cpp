#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "flockgraph/configuration.hpp"
#include "flockgraph/conjugacy.hpp"
#include "flockgraph/errors.hpp"
#include "flockgraph/flock.hpp"
#include "flockgraph/graph_canon.hpp"
#include "flockgraph/report.hpp"
#include "flockgraph/verify.hpp"

namespace {

using namespace flockgraph;

// exit codes: 0 ok, 2 parse error, 3 domain error, 4 resource guard
constexpr int kOk = 0;
constexpr int kGeneric = 1;
constexpr int kParse = 2;
constexpr int kDomain = 3;
constexpr int kResource = 4;

void check_n(unsigned n) {
  if (n < 1 || n > kMaxDegree)
    throw ParseError("--n must be in 1.." + std::to_string(kMaxDegree));
}

Partition parse_type(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const unsigned long v = std::stoul(item);
      if (v < 1 || v > kMaxDegree) throw ParseError("--type part out of range: " + item);
      parts.push_back(static_cast<unsigned>(v));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("--type must be a comma list of integers, got \"" + text + "\"");
    }
  }
  if (parts.empty()) throw ParseError("--type must name at least one part");
  std::sort(parts.begin(), parts.end());
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << doc;
}

std::string json_doc(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"configuration graphs of conjugate permutations in the symmetric group"};
  app.require_subcommand(1);

  unsigned n = 0;
  std::string sigma_text, start_text, phi_text, psi_text, type_text;
  std::string fmt = "text";
  std::string out_path;
  bool members = false;
  bool count_only = false;
  unsigned threads = 1;
  unsigned max_n = 5;

  auto* cmd_flocks = app.add_subcommand("flocks", "list every flock of S_n");
  cmd_flocks->add_option("--n", n, "degree")->required();
  cmd_flocks->add_option("--format", fmt, "text|json");
  cmd_flocks->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_orbit = app.add_subcommand("orbit", "forward orbit of the step map");
  cmd_orbit->add_option("--n", n, "degree")->required();
  cmd_orbit->add_option("--sigma", sigma_text, "stem permutation")->required();
  cmd_orbit->add_option("--start", start_text, "start permutation")->required();
  cmd_orbit->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_config = app.add_subcommand("config", "configuration of one permutation");
  cmd_config->add_option("--n", n, "degree")->required();
  cmd_config->add_option("--sigma", sigma_text, "stem permutation")->required();
  cmd_config->add_option("--start", start_text, "start permutation")->required();
  cmd_config->add_option("--format", fmt, "text|json|dot");
  cmd_config->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_atlas = app.add_subcommand("atlas", "full functional graph of a flock");
  cmd_atlas->add_option("--n", n, "degree")->required();
  cmd_atlas->add_option("--type", type_text, "partition as comma list, e.g. 1,2,3")
      ->required();
  cmd_atlas->add_option("--format", fmt, "text|json|dot");
  cmd_atlas->add_flag("--members", members, "include member lists");
  cmd_atlas->add_option("--threads", threads, "worker threads (output is identical)");
  cmd_atlas->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_conj = app.add_subcommand("conjugators", "all solutions of rho phi rho^-1 = psi");
  cmd_conj->add_option("--n", n, "degree")->required();
  cmd_conj->add_option("--phi", phi_text, "left permutation")->required();
  cmd_conj->add_option("--psi", psi_text, "right permutation")->required();
  cmd_conj->add_flag("--count-only", count_only, "print only the count");
  cmd_conj->add_option("--format", fmt, "text|json");
  cmd_conj->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_verify = app.add_subcommand("verify", "run the brute-force oracle suites");
  cmd_verify->add_option("--max-n", max_n, "largest degree to verify (1..7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (fmt != "text" && fmt != "json" && fmt != "dot")
      throw ParseError("--format must be text, json or dot");
    if (threads < 1 || threads > 64) throw ParseError("--threads must be in 1..64");

    if (app.got_subcommand(cmd_flocks)) {
      check_n(n);
      if (fmt == "dot") throw ParseError("flocks has no dot format");
      emit(fmt == "json" ? json_doc(flocks_json(n)) : flocks_text(n), out_path);
      return kOk;
    }

    if (app.got_subcommand(cmd_orbit)) {
      check_n(n);
      const Permutation sigma = parse(sigma_text, n);
      const Permutation start = parse(start_text, n);
      emit(orbit_text(forward_orbit(start, sigma)), out_path);
      return kOk;
    }

    if (app.got_subcommand(cmd_config)) {
      check_n(n);
      const Permutation sigma = parse(sigma_text, n);
      const Permutation start = parse(start_text, n);
      const ConfigurationGraph graph = build_configuration(start, sigma);
      if (fmt == "dot") {
        emit(dot_graph(graph), out_path);
      } else {
        const Flock flock = flock_of(cyclic_type(sigma), n);
        emit(fmt == "json" ? json_doc(config_report_json(graph, flock, start))
                           : config_report_text(graph, start),
             out_path);
      }
      return kOk;
    }

    if (app.got_subcommand(cmd_atlas)) {
      check_n(n);
      const Partition p = parse_type(type_text);
      if (p.sum() != n)
        throw ParseError("--type sums to " + std::to_string(p.sum()) + ", not --n = " +
                         std::to_string(n));
      const Flock flock = flock_of(p, n);
      const ConfigurationGraph graph = atlas(flock, threads);
      if (fmt == "dot")
        emit(dot_graph(graph), out_path);
      else
        emit(fmt == "json" ? json_doc(atlas_report_json(graph, flock, members))
                           : atlas_report_text(graph, flock, members),
             out_path);
      return kOk;
    }

    if (app.got_subcommand(cmd_conj)) {
      check_n(n);
      const Permutation phi = parse(phi_text, n);
      const Permutation psi = parse(psi_text, n);
      const ConjugatorFamily family = all_conjugators(phi, psi);
      emit(fmt == "json" ? json_doc(conjugators_json(family, count_only))
                         : conjugators_text(family, count_only),
           out_path);
      return kOk;
    }

    if (app.got_subcommand(cmd_verify)) {
      if (max_n < 1 || max_n > 7) throw ParseError("--max-n must be in 1..7");
      return run_verification(max_n, std::cout) ? kOk : kGeneric;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGeneric;
  }
  return kGeneric;
}
