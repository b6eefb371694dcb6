#include "flockgraph/graph_canon.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace flockgraph {

namespace {

// AHU-style code of the predecessor tree hanging below `parent`:
// sorted child codes wrapped in parentheses.  Codes are built bottom-up in
// peel order, so no recursion is needed.
std::string wrap_children(const ConfigurationGraph& g, NodeId parent,
                          const std::unordered_map<NodeId, std::string>& codes,
                          bool skip_cycle_pred) {
  std::vector<std::string> kids;
  for (NodeId p : g.predecessors(parent)) {
    if (skip_cycle_pred && g.on_cycle(p)) continue;  // the in-cycle edge is not a tree edge
    kids.push_back(codes.at(p));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

}  // namespace

std::string canonical_code(const ConfigurationGraph& graph, std::uint32_t component_id) {
  const auto nodes = graph.component_nodes(component_id);

  // bottom-up over the trees: peel nodes whose children are all coded
  std::unordered_map<NodeId, std::string> codes;
  std::unordered_map<NodeId, std::uint32_t> pending;  // uncoded tree children left
  std::vector<NodeId> ready;
  for (NodeId v : nodes) {
    if (graph.on_cycle(v)) continue;
    const auto kids = static_cast<std::uint32_t>(graph.predecessors(v).size());
    pending[v] = kids;
    if (kids == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const NodeId v = ready.back();
    ready.pop_back();
    codes[v] = wrap_children(graph, v, codes, false);
    const NodeId w = graph.successor(v);
    if (!graph.on_cycle(w) && --pending[w] == 0) ready.push_back(w);
  }

  // ring of per-cycle-node codes, in successor direction from the
  // smallest cycle node
  NodeId start = 0;
  bool found = false;
  for (NodeId v : nodes) {
    if (graph.on_cycle(v)) {
      start = v;
      found = true;
      break;
    }
  }
  if (!found) return "";  // cannot happen: every component has a cycle
  std::vector<std::string> ring;
  NodeId v = start;
  do {
    ring.push_back(wrap_children(graph, v, codes, true));
    v = graph.successor(v);
  } while (v != start);

  // lexicographically minimal rotation of the ring
  const std::size_t len = ring.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < len; ++cand) {
    for (std::size_t j = 0; j < len; ++j) {
      const std::string& a = ring[(cand + j) % len];
      const std::string& b = ring[(best + j) % len];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  std::string out;
  for (std::size_t j = 0; j < len; ++j) out += ring[(best + j) % len];
  return out;
}

bool is_isomorphic(const ConfigurationGraph& a, std::uint32_t component_a,
                   const ConfigurationGraph& b, std::uint32_t component_b) {
  return canonical_code(a, component_a) == canonical_code(b, component_b);
}

std::vector<IsoClass> iso_classes(const ConfigurationGraph& graph) {
  std::map<std::string, std::vector<std::uint32_t>> groups;
  for (std::uint32_t c = 0; c < graph.component_count(); ++c)
    groups[canonical_code(graph, c)].push_back(c);
  std::vector<IsoClass> out;
  out.reserve(groups.size());
  for (auto& [code, ids] : groups) out.push_back({code, std::move(ids)});
  return out;
}

}  // namespace flockgraph
