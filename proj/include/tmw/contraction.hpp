#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "tmw/canonical.hpp"
#include "tmw/graph.hpp"

namespace tmw {

// Contracts one edge. An ordinary edge merges its endpoints into a vertex of
// summed genus (the smaller vertex id survives); a loop disappears and bumps
// its vertex's genus by one. Genus, connectivity and stability are preserved;
// surviving vertex/edge/half-edge ids are unchanged.
inline WeightedGraph contract_edge(const WeightedGraph& g, int edge_id) {
  const auto& e = g.edge(edge_id);
  const auto [u, v] = g.edge_ends(edge_id);

  std::vector<WeightedGraph::Vertex> vs;
  if (u == v) {
    for (auto w : g.vertices()) {
      if (w.id == u) w.genus += 1;
      vs.push_back(w);
    }
  } else {
    const int keep = std::min(u, v);
    const int gone = std::max(u, v);
    const int merged = g.vertex(u).genus + g.vertex(v).genus;
    for (auto w : g.vertices()) {
      if (w.id == gone) continue;
      if (w.id == keep) w.genus = merged;
      vs.push_back(w);
    }
  }

  std::vector<WeightedGraph::HalfEdge> hs;
  for (auto h : g.half_edges()) {
    if (h.id == e.half_a || h.id == e.half_b) continue;
    if (u != v && h.vertex == std::max(u, v)) h.vertex = std::min(u, v);
    hs.push_back(h);
  }

  std::vector<WeightedGraph::Edge> es;
  for (const auto& f : g.edges())
    if (f.id != edge_id) es.push_back(f);

  return WeightedGraph::from_parts(std::move(vs), std::move(hs), std::move(es), g.legs());
}

// Contracts a set of edges; the result does not depend on the order (ids are
// deduplicated, and an edge that becomes a loop along the way contracts by
// the loop rule).
inline WeightedGraph contract_set(const WeightedGraph& g, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  for (int id : edge_ids) g.edge(id);  // reject unknown ids up front
  WeightedGraph out = g;
  for (int id : edge_ids) out = contract_edge(out, id);
  return out;
}

// True iff some subset of fine's edges contracts it onto a graph isomorphic
// to coarse. Exhaustive over subsets of the forced size |E(fine)|-|E(coarse)|.
inline bool is_contraction_of(const WeightedGraph& fine, const WeightedGraph& coarse) {
  require_connected(fine);
  require_connected(coarse);
  if (genus(fine) != genus(coarse)) return false;
  if (fine.legs().size() != coarse.legs().size()) return false;
  const int delta = static_cast<int>(fine.edges().size()) - static_cast<int>(coarse.edges().size());
  if (delta < 0) return false;

  const CanonicalForm target = canonical_form(coarse);
  std::vector<int> ids;
  for (const auto& e : fine.edges()) ids.push_back(e.id);

  std::vector<int> subset;
  auto search = [&](auto&& self, std::size_t start) -> bool {
    if (static_cast<int>(subset.size()) == delta)
      return canonical_form(contract_set(fine, subset)) == target;
    if (ids.size() - start < delta - subset.size()) return false;
    for (std::size_t k = start; k < ids.size(); ++k) {
      subset.push_back(ids[k]);
      if (self(self, k + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace tmw
