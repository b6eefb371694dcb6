#pragma once

#include <string>

#include "json.hpp"

#include "flockgraph/configuration.hpp"
#include "flockgraph/conjugacy.hpp"
#include "flockgraph/flock.hpp"

namespace flockgraph {

// Document emitters behind the CLI.  Everything here is deterministic:
// identical inputs produce byte-identical output.

nlohmann::ordered_json atlas_report_json(const ConfigurationGraph& graph,
                                         const Flock& flock, bool include_members);
std::string atlas_report_text(const ConfigurationGraph& graph, const Flock& flock,
                              bool include_members);

/// Single-component report for one configuration; members always included.
nlohmann::ordered_json config_report_json(const ConfigurationGraph& graph,
                                          const Flock& flock,
                                          const Permutation& start);
std::string config_report_text(const ConfigurationGraph& graph,
                               const Permutation& start);

/// "(a.) → (b.) → ... → back to (c.)"
std::string orbit_text(const OrbitTrace& orbit);

std::string flocks_text(unsigned n);
nlohmann::ordered_json flocks_json(unsigned n);

std::string conjugators_text(const ConjugatorFamily& family, bool count_only);
nlohmann::ordered_json conjugators_json(const ConjugatorFamily& family,
                                        bool count_only);

/// DOT document for a configuration or atlas: one node per permutation
/// labeled with its notation, edges phi -> T(phi).  Telomeres get
/// shape=box, cycle nodes penwidth=2; styling is cosmetic, topology is
/// the contract.
std::string dot_graph(const ConfigurationGraph& graph);

}  // namespace flockgraph
