#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tmw/canonical.hpp"
#include "tmw/graph.hpp"

namespace tmw {

struct GraphClass {
  CanonicalForm key;
  WeightedGraph representative;
};

struct EnumerationResult {
  int genus = 0;
  int legs = 0;
  std::vector<GraphClass> classes;  // sorted by key, pairwise non-isomorphic
  std::map<int, int> counts_by_edges;
};

inline std::map<int, int> counts_by_codim(const EnumerationResult& result) {
  std::map<int, int> counts;
  for (const auto& cls : result.classes)
    ++counts[static_cast<int>(cls.representative.edges().size())];
  return counts;
}

namespace detail {

inline int max_vertex_id(const WeightedGraph& g) {
  int top = -1;
  for (const auto& v : g.vertices()) top = std::max(top, v.id);
  return top;
}

inline int max_edge_id(const WeightedGraph& g) {
  int top = -1;
  for (const auto& e : g.edges()) top = std::max(top, e.id);
  return top;
}

// Un-contraction move (b): lower a vertex's genus by one and attach a loop.
inline bool try_loop_move(const WeightedGraph& g, int vertex_id, WeightedGraph& out) {
  const auto& v = g.vertex(vertex_id);
  if (v.genus < 1) return false;
  if (v.genus - 1 == 0 && valence(g, vertex_id) + 2 < 3) return false;

  std::vector<WeightedGraph::Vertex> vs;
  for (auto w : g.vertices()) {
    if (w.id == vertex_id) w.genus -= 1;
    vs.push_back(w);
  }
  std::vector<WeightedGraph::HalfEdge> hs = g.half_edges();
  std::vector<WeightedGraph::Edge> es = g.edges();
  int h = 0;
  for (const auto& rec : hs) h = std::max(h, rec.id + 1);
  hs.push_back({h, vertex_id});
  hs.push_back({h + 1, vertex_id});
  es.push_back({max_edge_id(g) + 1, h, h + 1});
  out = WeightedGraph::from_parts(std::move(vs), std::move(hs), std::move(es), g.legs());
  return true;
}

// Un-contraction move (a): split a vertex into two joined by a fresh edge,
// distributing genus, incident edge ends, loops and legs. Parallel edges to
// one neighbor are interchangeable, so only their counts are enumerated; a
// loop either stays on one side or splits into an extra edge between the two
// halves. Emits every stable result.
struct VertexSplitter {
  const WeightedGraph& g;
  int vertex_id;

  template <typename Sink>
  void emit(Sink&& sink) const {
    const auto& v = g.vertex(vertex_id);

    std::vector<std::pair<int, std::vector<int>>> neighbors;  // (vertex, edge ids)
    std::vector<int> loops;
    {
      std::map<int, std::vector<int>> by_neighbor;
      for (const auto& e : g.edges()) {
        const auto [a, b] = g.edge_ends(e.id);
        if (a == vertex_id && b == vertex_id)
          loops.push_back(e.id);
        else if (a == vertex_id)
          by_neighbor[b].push_back(e.id);
        else if (b == vertex_id)
          by_neighbor[a].push_back(e.id);
      }
      for (auto& [u, ids] : by_neighbor) {
        std::sort(ids.begin(), ids.end());
        neighbors.emplace_back(u, std::move(ids));
      }
      std::sort(loops.begin(), loops.end());
    }
    std::vector<int> leg_half_edges;
    for (const auto& l : g.legs())
      if (g.half_edge(l.half_edge).vertex == vertex_id) leg_half_edges.push_back(l.half_edge);
    std::sort(leg_half_edges.begin(), leg_half_edges.end());

    const int total_loops = static_cast<int>(loops.size());
    const int total_legs = static_cast<int>(leg_half_edges.size());
    int degree_rest = 0;  // half-edges at v from non-loop edges
    for (const auto& [u, ids] : neighbors) degree_rest += static_cast<int>(ids.size());

    std::vector<int> counts(neighbors.size(), 0);  // edge ends kept on side 1
    for (int g1 = 0; g1 <= v.genus; ++g1) {
      const int g2 = v.genus - g1;
      // odometer over per-neighbor counts
      std::fill(counts.begin(), counts.end(), 0);
      while (true) {
        int kept = 0;
        for (int c : counts) kept += c;
        for (int stay1 = 0; stay1 <= total_loops; ++stay1) {
          for (int split = 0; split + stay1 <= total_loops; ++split) {
            const int stay2 = total_loops - stay1 - split;
            for (unsigned mask = 0; mask < (1u << total_legs); ++mask) {
              const int legs1 = static_cast<int>(std::popcount(mask));
              const int val1 = kept + 2 * stay1 + split + legs1 + 1;
              const int val2 = (degree_rest - kept) + 2 * stay2 + split + (total_legs - legs1) + 1;
              if (g1 == 0 && val1 < 3) continue;
              if (g2 == 0 && val2 < 3) continue;
              sink(build(g1, g2, counts, stay1, split, mask, neighbors, loops, leg_half_edges));
            }
          }
        }
        // advance odometer
        std::size_t pos = 0;
        while (pos < counts.size()) {
          if (counts[pos] < static_cast<int>(neighbors[pos].second.size())) {
            ++counts[pos];
            break;
          }
          counts[pos] = 0;
          ++pos;
        }
        if (pos == counts.size()) break;
      }
    }
  }

 private:
  WeightedGraph build(int g1, int g2, const std::vector<int>& counts, int stay1, int split,
                      unsigned leg_mask, const std::vector<std::pair<int, std::vector<int>>>& neighbors,
                      const std::vector<int>& loops, const std::vector<int>& leg_half_edges) const {
    const int new_vertex = max_vertex_id(g) + 1;

    // Half-edges that move to the new vertex: the tail of each neighbor
    // class, the loop halves assigned to side 2, and the unmasked legs.
    std::vector<int> moved;
    for (std::size_t k = 0; k < neighbors.size(); ++k) {
      const auto& ids = neighbors[k].second;
      for (std::size_t t = counts[k]; t < ids.size(); ++t) {
        const auto& e = g.edge(ids[t]);
        moved.push_back(g.half_edge(e.half_a).vertex == vertex_id ? e.half_a : e.half_b);
      }
    }
    for (int t = 0; t < static_cast<int>(loops.size()); ++t) {
      const auto& e = g.edge(loops[t]);
      if (t < stay1) continue;        // loop stays on side 1
      if (t < stay1 + split) {        // loop splits: one half per side
        moved.push_back(e.half_b);
      } else {                        // loop moves to side 2
        moved.push_back(e.half_a);
        moved.push_back(e.half_b);
      }
    }
    for (int t = 0; t < static_cast<int>(leg_half_edges.size()); ++t)
      if (!(leg_mask & (1u << t))) moved.push_back(leg_half_edges[t]);
    std::sort(moved.begin(), moved.end());

    std::vector<WeightedGraph::Vertex> vs;
    for (auto w : g.vertices()) {
      if (w.id == vertex_id) w.genus = g1;
      vs.push_back(w);
    }
    vs.push_back({new_vertex, g2});

    std::vector<WeightedGraph::HalfEdge> hs = g.half_edges();
    int next_h = 0;
    for (const auto& rec : hs) next_h = std::max(next_h, rec.id + 1);
    for (auto& h : hs)
      if (std::binary_search(moved.begin(), moved.end(), h.id)) h.vertex = new_vertex;

    std::vector<WeightedGraph::Edge> es = g.edges();
    hs.push_back({next_h, vertex_id});
    hs.push_back({next_h + 1, new_vertex});
    es.push_back({max_edge_id(g) + 1, next_h, next_h + 1});

    return WeightedGraph::from_parts(std::move(vs), std::move(hs), std::move(es), g.legs());
  }
};

}  // namespace detail

// Exhaustive isomorph-free enumeration of stable weighted graphs of genus g
// with n labeled legs: breadth-first search from the 0-edge graph using the
// two inverse contraction moves (vertex split, genus-to-loop), deduplicating
// by canonical form. Contraction preserves stability, so every class is
// reached through stable intermediates.
inline EnumerationResult enumerate_stable_graphs(int g, int n) {
  if (g < 0 || n < 0 || 3 * g - 3 + n < 0) throw ValidationError("unstable range");

  EnumerationResult result;
  result.genus = g;
  result.legs = n;

  WeightedGraph root;
  root.add_vertex_with_id(0, g);
  for (int label = 1; label <= n; ++label) root.add_leg(0, label);

  std::map<std::string, WeightedGraph> found;
  std::vector<WeightedGraph> frontier;
  if (is_stable(root)) {
    found[canonical_form(root).bytes] = root;
    frontier.push_back(root);
  }

  const int max_edges = 3 * g - 3 + n;
  while (!frontier.empty()) {
    std::vector<WeightedGraph> next;
    for (const auto& parent : frontier) {
      if (static_cast<int>(parent.edges().size()) >= max_edges) continue;
      auto consider = [&](const WeightedGraph& candidate) {
        const CanonicalForm key = canonical_form(candidate);
        if (found.emplace(key.bytes, candidate).second) next.push_back(candidate);
      };
      for (const auto& v : parent.vertices()) {
        WeightedGraph with_loop;
        if (detail::try_loop_move(parent, v.id, with_loop)) consider(with_loop);
        detail::VertexSplitter{parent, v.id}.emit(consider);
      }
    }
    frontier = std::move(next);
  }

  for (auto& [bytes, graph] : found) {
    result.classes.push_back({CanonicalForm{bytes}, std::move(graph)});
    ++result.counts_by_edges[static_cast<int>(result.classes.back().representative.edges().size())];
  }
  return result;
}

}  // namespace tmw
