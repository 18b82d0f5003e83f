#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tmw/enumeration.hpp"
#include "tmw/graph.hpp"
#include "tmw/poset.hpp"

namespace tmw {

// Short human-readable signature: sorted vertex genera, edge/loop/leg counts.
inline std::string describe_graph(const WeightedGraph& g) {
  std::vector<int> genera;
  for (const auto& v : g.vertices()) genera.push_back(v.genus);
  std::sort(genera.begin(), genera.end());
  int loops = 0;
  for (const auto& e : g.edges())
    if (g.is_loop(e.id)) ++loops;
  std::ostringstream out;
  out << "g=[";
  for (std::size_t i = 0; i < genera.size(); ++i) out << (i ? "," : "") << genera[i];
  out << "] E=" << g.edges().size() << " loops=" << loops << " legs=" << g.legs().size();
  return out.str();
}

// Undirected DOT drawing; loops and parallel edges are kept, legs hang off
// their vertex as unshaped label nodes.
inline std::string graph_to_dot(const WeightedGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& v : g.vertices())
    out << "  v" << v.id << " [label=\"v" << v.id << " (g=" << v.genus << ")\"];\n";
  for (const auto& l : g.legs())
    out << "  leg" << l.label << " [shape=none, label=\"" << l.label << "\"];\n";
  for (const auto& e : g.edges()) {
    const auto [u, v] = g.edge_ends(e.id);
    out << "  v" << u << " -- v" << v << " [label=\"e" << e.id << "\"];\n";
  }
  for (const auto& l : g.legs())
    out << "  v" << g.half_edge(l.half_edge).vertex << " -- leg" << l.label
        << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

// Hasse diagram with one row per codimension (codim 0 on top); arrows point
// from a graph to its single-edge contractions.
inline std::string poset_to_dot(const StrataPoset& poset) {
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& el : poset.elements)
    out << "  \"" << el.key.hex() << "\" [label=\"codim " << el.codim << "\\n"
        << describe_graph(el.representative) << "\"];\n";
  std::map<int, std::vector<std::string>> rows;
  for (const auto& el : poset.elements) rows[el.codim].push_back(el.key.hex());
  for (const auto& [codim, keys] : rows) {
    out << "  { rank=same;";
    for (const auto& key : keys) out << " \"" << key << "\";";
    out << " }\n";
  }
  for (const auto& [child, parent] : poset.covers)
    out << "  \"" << child.hex() << "\" -> \"" << parent.hex() << "\";\n";
  out << "}\n";
  return out.str();
}

// Gallery of all enumerated classes, one cluster per class.
inline std::string enumeration_to_dot(const EnumerationResult& result) {
  std::ostringstream out;
  out << "graph census {\n";
  int index = 0;
  for (const auto& cls : result.classes) {
    const WeightedGraph& g = cls.representative;
    out << "  subgraph cluster_" << index << " {\n";
    out << "    label=\"#" << index << ": " << describe_graph(g) << "\";\n";
    for (const auto& v : g.vertices())
      out << "    c" << index << "v" << v.id << " [label=\"v" << v.id << " (g=" << v.genus
          << ")\"];\n";
    for (const auto& l : g.legs())
      out << "    c" << index << "leg" << l.label << " [shape=none, label=\"" << l.label
          << "\"];\n";
    for (const auto& e : g.edges()) {
      const auto [u, v] = g.edge_ends(e.id);
      out << "    c" << index << "v" << u << " -- c" << index << "v" << v << ";\n";
    }
    for (const auto& l : g.legs())
      out << "    c" << index << "v" << g.half_edge(l.half_edge).vertex << " -- c" << index
          << "leg" << l.label << " [style=dashed];\n";
    out << "  }\n";
    ++index;
  }
  out << "}\n";
  return out.str();
}

}  // namespace tmw
