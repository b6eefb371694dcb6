#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flockgraph/configuration.hpp"

namespace flockgraph {

/// Label-independent canonical form of one component of a functional
/// graph.  Trees hanging off the cycle are canonized bottom-up (each
/// vertex becomes its sorted child codes wrapped in parentheses); the
/// component code is the lexicographically minimal rotation of the
/// per-cycle-vertex tree codes, concatenated.  Equal codes hold exactly
/// for isomorphic components.
std::string canonical_code(const ConfigurationGraph& graph, std::uint32_t component_id);

bool is_isomorphic(const ConfigurationGraph& a, std::uint32_t component_a,
                   const ConfigurationGraph& b, std::uint32_t component_b);

struct IsoClass {
  std::string code;
  std::vector<std::uint32_t> components;  // component ids, ascending
};

/// Components of the graph grouped by canonical code, classes ordered by
/// code string.
std::vector<IsoClass> iso_classes(const ConfigurationGraph& graph);

}  // namespace flockgraph
