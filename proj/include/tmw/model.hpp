#pragma once

#include <map>
#include <string>
#include <utility>

#include "tmw/graph.hpp"
#include "tmw/series.hpp"
#include "tmw/tropical.hpp"

namespace tmw {

// A nodal model: a stable dual graph together with one series f_e per edge,
// the local node equation xy = f_e over the valuation ring.
struct NodalModel {
  WeightedGraph graph;
  std::map<int, ValuedSeries> node_eq;
};

inline NodalModel make_nodal_model(WeightedGraph graph, std::map<int, ValuedSeries> node_eq) {
  graph.validate();
  if (!is_stable(graph)) throw ValidationError("unstable graph");
  for (const auto& e : graph.edges())
    if (!node_eq.count(e.id))
      throw ValidationError("missing node equation for edge " + std::to_string(e.id));
  for (const auto& [id, f] : node_eq)
    if (!graph.has_edge(id)) throw ValidationError("unknown edge id " + std::to_string(id));
  return {std::move(graph), std::move(node_eq)};
}

// Tropicalization: length(e) = val(f_e). A unit f_e (val 0) is not a node and
// is rejected; f_e outside the valuation ring is rejected as well. The zero
// series gives an infinite length.
inline TropicalCurve trop_of_model(const NodalModel& m) {
  for (const auto& e : m.graph.edges())
    if (!m.node_eq.count(e.id))
      throw ValidationError("missing node equation for edge " + std::to_string(e.id));
  std::map<int, ExtRational> lengths;
  for (const auto& [id, f] : m.node_eq) {
    if (!m.graph.has_edge(id)) throw ValidationError("unknown edge id " + std::to_string(id));
    const ExtRational v = val(f);
    if (v == ExtRational(0))
      throw ValidationError("not a node: node equation of edge " + std::to_string(id) +
                            " is a unit");
    if (v < ExtRational(0))
      throw ValidationError("node equation of edge " + std::to_string(id) +
                            " is not in the valuation ring");
    lengths.emplace(id, v);
  }
  return make_tropical_curve(m.graph, std::move(lengths));
}

}  // namespace tmw
