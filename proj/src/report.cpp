#include "flockgraph/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include "flockgraph/graph_canon.hpp"
#include "flockgraph/ranking.hpp"

namespace flockgraph {

namespace {

nlohmann::ordered_json component_json(const ConfigurationGraph& g, std::uint32_t cid,
                                      bool include_members) {
  const ComponentInfo& info = g.component(cid);
  nlohmann::ordered_json j;
  j["id"] = cid;
  j["size"] = info.size;
  j["cycle_length"] = info.cycle_length;
  j["telomere_count"] = info.telomere_count;
  j["canonical_code"] = canonical_code(g, cid);
  if (include_members) {
    auto members = nlohmann::ordered_json::array();
    for (NodeId v : g.component_nodes(cid)) members.push_back(format(g.node(v)));
    j["members"] = std::move(members);
  }
  return j;
}

nlohmann::ordered_json partition_json(const Partition& p) {
  return nlohmann::ordered_json(p.parts());
}

}  // namespace

nlohmann::ordered_json atlas_report_json(const ConfigurationGraph& graph,
                                         const Flock& flock, bool include_members) {
  nlohmann::ordered_json j;
  j["n"] = flock.degree();
  j["partition"] = partition_json(flock.partition());
  j["stem"] = format(graph.stem());
  j["flock_size"] = flock.size();
  auto components = nlohmann::ordered_json::array();
  std::uint64_t telomeres = 0;
  std::uint64_t nodes = 0;
  for (std::uint32_t c = 0; c < graph.component_count(); ++c) {
    components.push_back(component_json(graph, c, include_members));
    telomeres += graph.component(c).telomere_count;
    nodes += graph.component(c).size;
  }
  j["components"] = std::move(components);
  j["totals"] = {{"components", graph.component_count()},
                 {"nodes", nodes},
                 {"telomeres", telomeres}};
  return j;
}

std::string atlas_report_text(const ConfigurationGraph& graph, const Flock& flock,
                              bool include_members) {
  std::ostringstream os;
  os << "atlas of flock " << to_string(flock.partition()) << " in S" << flock.degree()
     << "\n";
  os << "stem: " << format(graph.stem()) << "\n";
  os << "size: " << flock.size() << " permutations, " << graph.component_count()
     << " component" << (graph.component_count() == 1 ? "" : "s") << "\n\n";
  os << "id  size  cycle  telomeres  code\n";
  std::uint64_t telomeres = 0;
  for (std::uint32_t c = 0; c < graph.component_count(); ++c) {
    const ComponentInfo& info = graph.component(c);
    telomeres += info.telomere_count;
    os << std::left << std::setw(4) << c << std::setw(6) << info.size << std::setw(7)
       << info.cycle_length << std::setw(11) << info.telomere_count
       << canonical_code(graph, c) << "\n";
    if (include_members) {
      os << "    members:";
      for (NodeId v : graph.component_nodes(c)) os << ' ' << format(graph.node(v));
      os << "\n";
    }
  }
  os << "\ntotal telomeres: " << telomeres << "\n";
  return os.str();
}

nlohmann::ordered_json config_report_json(const ConfigurationGraph& graph,
                                          const Flock& flock, const Permutation& start) {
  nlohmann::ordered_json j;
  j["n"] = flock.degree();
  j["partition"] = partition_json(flock.partition());
  j["stem"] = format(graph.stem());
  j["start"] = format(start);
  j["flock_size"] = flock.size();
  auto components = nlohmann::ordered_json::array();
  std::uint64_t telomeres = 0;
  std::uint64_t nodes = 0;
  for (std::uint32_t c = 0; c < graph.component_count(); ++c) {
    components.push_back(component_json(graph, c, true));
    telomeres += graph.component(c).telomere_count;
    nodes += graph.component(c).size;
  }
  j["components"] = std::move(components);
  j["totals"] = {{"components", graph.component_count()},
                 {"nodes", nodes},
                 {"telomeres", telomeres}};
  return j;
}

std::string config_report_text(const ConfigurationGraph& graph, const Permutation& start) {
  std::ostringstream os;
  const ComponentInfo& info = graph.component(0);
  os << "configuration of " << format(start) << " in S" << graph.degree() << "\n";
  os << "stem: " << format(graph.stem()) << "\n";
  os << "nodes: " << graph.node_count() << ", cycle length: " << info.cycle_length
     << ", telomeres: " << info.telomere_count << "\n";
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    os << format(graph.node(v)) << " -> " << format(graph.node(graph.successor(v)));
    if (graph.is_telomere(v))
      os << "  [telomere]";
    else if (graph.on_cycle(v))
      os << "  [cycle]";
    os << "\n";
  }
  return os.str();
}

std::string orbit_text(const OrbitTrace& orbit) {
  std::ostringstream os;
  for (const auto& p : orbit.tail) os << format(p) << " → ";
  for (const auto& p : orbit.cycle) os << format(p) << " → ";
  os << "back to " << format(orbit.cycle.front()) << "\n";
  return os.str();
}

std::string flocks_text(unsigned n) {
  const auto parts = partitions_of(n);
  std::vector<std::array<std::string, 2>> cells;
  std::size_t type_w = 4, stem_w = 4;
  for (const auto& p : parts) {
    std::array<std::string, 2> row = {to_string(p), format(stem_permutation(p))};
    type_w = std::max(type_w, row[0].size());
    stem_w = std::max(stem_w, row[1].size());
    cells.push_back(std::move(row));
  }
  std::ostringstream os;
  os << "flocks of S" << n << ": " << parts.size() << "\n";
  os << std::left << std::setw(static_cast<int>(type_w + 2)) << "type"
     << std::setw(static_cast<int>(stem_w + 2)) << "stem" << std::setw(12) << "size"
     << "conjugators\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Flock f = flock_of(parts[i], n);
    os << std::left << std::setw(static_cast<int>(type_w + 2)) << cells[i][0]
       << std::setw(static_cast<int>(stem_w + 2)) << cells[i][1] << std::setw(12)
       << f.size() << count_conjugators(to_cycle_type(parts[i])) << "\n";
  }
  return os.str();
}

nlohmann::ordered_json flocks_json(unsigned n) {
  nlohmann::ordered_json j;
  j["n"] = n;
  auto flocks = nlohmann::ordered_json::array();
  for (const auto& p : partitions_of(n)) {
    const Flock f = flock_of(p, n);
    nlohmann::ordered_json row;
    row["partition"] = partition_json(p);
    row["stem"] = format(f.stem());
    row["size"] = f.size();
    row["conjugator_count"] = count_conjugators(to_cycle_type(p));
    flocks.push_back(std::move(row));
  }
  j["flocks"] = std::move(flocks);
  return j;
}

std::string conjugators_text(const ConjugatorFamily& family, bool count_only) {
  std::ostringstream os;
  os << "conjugators of " << format(family.phi()) << " onto " << format(family.psi())
     << ": " << family.total() << "\n";
  if (!count_only) {
    auto cur = family.cursor();
    while (auto rho = cur.next()) os << format(*rho) << "\n";
  }
  return os.str();
}

nlohmann::ordered_json conjugators_json(const ConjugatorFamily& family, bool count_only) {
  nlohmann::ordered_json j;
  j["n"] = family.phi().degree();
  j["phi"] = format(family.phi());
  j["psi"] = format(family.psi());
  j["count"] = family.total();
  if (!count_only) {
    auto list = nlohmann::ordered_json::array();
    auto cur = family.cursor();
    while (auto rho = cur.next()) list.push_back(format(*rho));
    j["conjugators"] = std::move(list);
  }
  return j;
}

std::string dot_graph(const ConfigurationGraph& graph) {
  std::ostringstream os;
  os << "digraph configuration {\n";
  os << "  rankdir=LR;\n";
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    os << "  \"" << format(graph.node(v)) << "\"";
    if (graph.is_telomere(v))
      os << " [shape=box]";
    else if (graph.on_cycle(v))
      os << " [penwidth=2]";
    os << ";\n";
  }
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    os << "  \"" << format(graph.node(v)) << "\" -> \""
       << format(graph.node(graph.successor(v))) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace flockgraph
