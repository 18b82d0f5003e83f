#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "tmw/automorphism.hpp"
#include "tmw/canonical.hpp"
#include "tmw/contraction.hpp"
#include "tmw/graph.hpp"
#include "tmw/rational.hpp"

namespace tmw {

// A stable weighted graph with an edge length in (0, inf] per edge.
class TropicalCurve {
 public:
  const WeightedGraph& graph() const { return graph_; }
  const std::map<int, ExtRational>& lengths() const { return lengths_; }

  const ExtRational& length(int edge_id) const {
    const auto it = lengths_.find(edge_id);
    if (it == lengths_.end()) throw ValidationError("unknown edge id " + std::to_string(edge_id));
    return it->second;
  }

  friend TropicalCurve make_tropical_curve(WeightedGraph graph, std::map<int, ExtRational> lengths);

 private:
  TropicalCurve() = default;
  WeightedGraph graph_;
  std::map<int, ExtRational> lengths_;
};

inline TropicalCurve make_tropical_curve(WeightedGraph graph, std::map<int, ExtRational> lengths) {
  graph.validate();
  if (!is_stable(graph)) throw ValidationError("unstable graph");
  for (const auto& e : graph.edges()) {
    const auto it = lengths.find(e.id);
    if (it == lengths.end())
      throw ValidationError("missing edge length for edge " + std::to_string(e.id));
    const ExtRational& len = it->second;
    if (!len.is_infinite() && len.finite() <= 0)
      throw ValidationError("edge length must be positive (edge " + std::to_string(e.id) + ")");
  }
  for (const auto& [id, len] : lengths)
    if (!graph.has_edge(id)) throw ValidationError("unknown edge id " + std::to_string(id));

  TropicalCurve t;
  t.graph_ = std::move(graph);
  t.lengths_ = std::move(lengths);
  return t;
}

// True iff some isomorphism of the underlying graphs matches the length
// functions. Parallel edges and loops are interchangeable, so lengths are
// compared as multisets per vertex pair.
inline bool tropical_iso(const TropicalCurve& t1, const TropicalCurve& t2) {
  const auto witness = find_isomorphism(t1.graph(), t2.graph());
  if (!witness) return false;

  const detail::DenseGraph d1 = detail::DenseGraph::build(t1.graph());
  const auto autos = detail::enumerate_vertex_automorphisms(d1);

  auto sorted_lengths = [](const TropicalCurve& t, int u, int v) {
    std::vector<ExtRational> out;
    for (const auto& e : t.graph().edges()) {
      const auto [a, b] = t.graph().edge_ends(e.id);
      if ((a == u && b == v) || (a == v && b == u)) out.push_back(t.length(e.id));
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  for (const auto& alpha : autos) {
    auto image = [&](int vertex_id) {
      const int idx = d1.index_of.at(vertex_id);
      return witness->vertex_map.at(d1.vertex_ids[alpha[idx]]);
    };
    bool match = true;
    for (int i = 0; i < d1.n && match; ++i)
      for (int j = i; j < d1.n && match; ++j) {
        if (d1.mult[i][j] == 0 && i != j) continue;
        const int u = d1.vertex_ids[i], v = d1.vertex_ids[j];
        if (sorted_lengths(t1, u, v) != sorted_lengths(t2, image(u), image(v))) match = false;
      }
    if (match) return true;
  }
  return false;
}

// The limit where the lengths of S shrink to zero: the curve on the
// contracted graph keeping the surviving lengths.
inline TropicalCurve specialize(const TropicalCurve& t, const std::vector<int>& edge_ids) {
  for (int id : edge_ids) t.graph().edge(id);  // reject unknown ids
  WeightedGraph contracted = contract_set(t.graph(), edge_ids);
  std::map<int, ExtRational> lengths;
  for (const auto& e : contracted.edges()) lengths.emplace(e.id, t.length(e.id));
  return make_tropical_curve(std::move(contracted), std::move(lengths));
}

}  // namespace tmw
