#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tmw/errors.hpp"

namespace tmw {

// Finite multigraph in half-edge representation: every edge is a pair of
// half-edges (a loop pairs two half-edges on the same vertex), every leg is a
// single unpaired half-edge carrying a marking label. Vertices carry a
// non-negative integer genus. Vertex/edge ids are arbitrary distinct
// integers chosen by the caller; half-edge ids are bookkeeping and are
// assigned automatically unless the graph is built from explicit parts.
//
// Values are treated as immutable once built; every operation below returns
// fresh graphs instead of mutating.
class WeightedGraph {
 public:
  struct Vertex {
    int id;
    int genus;
  };
  struct HalfEdge {
    int id;
    int vertex;
  };
  struct Edge {
    int id;
    int half_a;
    int half_b;
  };
  struct Leg {
    int label;
    int half_edge;
  };

  WeightedGraph() = default;

  int add_vertex(int genus) {
    const int id = next_vertex_id_++;
    add_vertex_with_id(id, genus);
    return id;
  }

  void add_vertex_with_id(int id, int genus) {
    if (genus < 0) throw ValidationError("vertex genus must be non-negative");
    if (find_vertex(id)) throw ValidationError("duplicate vertex id " + std::to_string(id));
    vertices_.push_back({id, genus});
    next_vertex_id_ = std::max(next_vertex_id_, id + 1);
  }

  int add_edge(int u, int v) {
    const int id = next_edge_id_++;
    add_edge_with_id(id, u, v);
    return id;
  }

  void add_edge_with_id(int id, int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (find_edge(id)) throw ValidationError("duplicate edge id " + std::to_string(id));
    const int ha = fresh_half_edge(u);
    const int hb = fresh_half_edge(v);
    edges_.push_back({id, ha, hb});
    next_edge_id_ = std::max(next_edge_id_, id + 1);
  }

  void add_leg(int vertex, int label) {
    require_vertex(vertex);
    for (const Leg& l : legs_)
      if (l.label == label) throw ValidationError("duplicate leg label " + std::to_string(label));
    legs_.push_back({label, fresh_half_edge(vertex)});
  }

  // Builds a graph from explicit records (ids included) and checks every
  // structural invariant. The edge list plays the role of the fixed-point-free
  // pairing involution on non-leg half-edges.
  static WeightedGraph from_parts(std::vector<Vertex> vertices, std::vector<HalfEdge> half_edges,
                                  std::vector<Edge> edges, std::vector<Leg> legs) {
    WeightedGraph g;
    g.vertices_ = std::move(vertices);
    g.half_edges_ = std::move(half_edges);
    g.edges_ = std::move(edges);
    g.legs_ = std::move(legs);
    g.validate();
    for (const Vertex& v : g.vertices_) g.next_vertex_id_ = std::max(g.next_vertex_id_, v.id + 1);
    for (const Edge& e : g.edges_) g.next_edge_id_ = std::max(g.next_edge_id_, e.id + 1);
    for (const HalfEdge& h : g.half_edges_)
      g.next_half_edge_id_ = std::max(g.next_half_edge_id_, h.id + 1);
    return g;
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }

  bool has_vertex(int id) const { return find_vertex(id) != nullptr; }
  bool has_edge(int id) const { return find_edge(id) != nullptr; }

  const Vertex& vertex(int id) const {
    const Vertex* v = find_vertex(id);
    if (!v) throw ValidationError("unknown vertex id " + std::to_string(id));
    return *v;
  }

  const Edge& edge(int id) const {
    const Edge* e = find_edge(id);
    if (!e) throw ValidationError("unknown edge id " + std::to_string(id));
    return *e;
  }

  const HalfEdge& half_edge(int id) const {
    for (const HalfEdge& h : half_edges_)
      if (h.id == id) return h;
    throw ValidationError("unknown half-edge id " + std::to_string(id));
  }

  // Vertex ids at the two ends, in (half_a, half_b) order.
  std::pair<int, int> edge_ends(int edge_id) const {
    const Edge& e = edge(edge_id);
    return {half_edge(e.half_a).vertex, half_edge(e.half_b).vertex};
  }

  bool is_loop(int edge_id) const {
    const auto [u, v] = edge_ends(edge_id);
    return u == v;
  }

  // Checks every structural invariant except connectivity (operations that
  // need connectivity check it themselves and report "graph not connected").
  void validate() const {
    std::set<int> vids;
    for (const Vertex& v : vertices_) {
      if (v.genus < 0) throw ValidationError("vertex genus must be non-negative");
      if (!vids.insert(v.id).second)
        throw ValidationError("duplicate vertex id " + std::to_string(v.id));
    }
    std::set<int> hids;
    for (const HalfEdge& h : half_edges_) {
      if (!hids.insert(h.id).second)
        throw ValidationError("duplicate half-edge id " + std::to_string(h.id));
      if (!vids.count(h.vertex))
        throw ValidationError("half-edge " + std::to_string(h.id) + " at unknown vertex " +
                              std::to_string(h.vertex));
    }
    std::set<int> eids;
    std::set<int> used;  // half-edges consumed by the pairing or a leg
    for (const Edge& e : edges_) {
      if (!eids.insert(e.id).second)
        throw ValidationError("duplicate edge id " + std::to_string(e.id));
      if (e.half_a == e.half_b)
        throw ValidationError("edge " + std::to_string(e.id) + " pairs a half-edge with itself");
      for (int h : {e.half_a, e.half_b}) {
        if (!hids.count(h))
          throw ValidationError("edge " + std::to_string(e.id) + " references unknown half-edge " +
                                std::to_string(h));
        if (!used.insert(h).second)
          throw ValidationError("half-edge " + std::to_string(h) + " used more than once");
      }
    }
    std::set<int> labels;
    for (const Leg& l : legs_) {
      if (!labels.insert(l.label).second)
        throw ValidationError("duplicate leg label " + std::to_string(l.label));
      if (!hids.count(l.half_edge))
        throw ValidationError("leg " + std::to_string(l.label) + " references unknown half-edge " +
                              std::to_string(l.half_edge));
      if (!used.insert(l.half_edge).second)
        throw ValidationError("half-edge " + std::to_string(l.half_edge) + " used more than once");
    }
    if (used.size() != half_edges_.size())
      throw ValidationError("unpaired half-edge that is not a leg");
    // Marking labels are 1..n.
    int want = 1;
    for (int label : labels) {
      if (label != want)
        throw ValidationError("leg labels must be exactly 1..n (missing " + std::to_string(want) +
                              ")");
      ++want;
    }
  }

 private:
  const Vertex* find_vertex(int id) const {
    for (const Vertex& v : vertices_)
      if (v.id == id) return &v;
    return nullptr;
  }
  const Edge* find_edge(int id) const {
    for (const Edge& e : edges_)
      if (e.id == id) return &e;
    return nullptr;
  }
  void require_vertex(int id) const {
    if (!has_vertex(id)) throw ValidationError("unknown vertex id " + std::to_string(id));
  }
  int fresh_half_edge(int vertex) {
    const int id = next_half_edge_id_++;
    half_edges_.push_back({id, vertex});
    return id;
  }

  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
  int next_vertex_id_ = 0;
  int next_edge_id_ = 0;
  int next_half_edge_id_ = 0;
};

inline bool is_connected(const WeightedGraph& g) {
  const auto& vs = g.vertices();
  if (vs.empty()) return false;
  std::map<int, std::vector<int>> adj;
  for (const auto& v : vs) adj[v.id];
  for (const auto& e : g.edges()) {
    const auto [u, v] = g.edge_ends(e.id);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> seen{vs.front().id};
  std::vector<int> stack{vs.front().id};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == vs.size();
}

inline void require_connected(const WeightedGraph& g) {
  if (!is_connected(g)) throw ValidationError("graph not connected");
}

// First Betti number plus the sum of the vertex weights. Legs do not count.
inline int genus(const WeightedGraph& g) {
  require_connected(g);
  int total = static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + 1;
  for (const auto& v : g.vertices()) total += v.genus;
  return total;
}

// Number of incident half-edges, legs included; a loop contributes two.
inline int valence(const WeightedGraph& g, int vertex_id) {
  g.vertex(vertex_id);
  int count = 0;
  for (const auto& h : g.half_edges())
    if (h.vertex == vertex_id) ++count;
  return count;
}

inline int loop_count(const WeightedGraph& g, int vertex_id) {
  g.vertex(vertex_id);
  int count = 0;
  for (const auto& e : g.edges()) {
    const auto [u, v] = g.edge_ends(e.id);
    if (u == vertex_id && v == vertex_id) ++count;
  }
  return count;
}

// Every genus-0 vertex needs valence >= 3 and every genus-1 vertex needs
// valence >= 1; higher genus is unconstrained.
inline bool is_stable(const WeightedGraph& g) {
  require_connected(g);
  for (const auto& v : g.vertices()) {
    const int val = valence(g, v.id);
    if (v.genus == 0 && val < 3) return false;
    if (v.genus == 1 && val < 1) return false;
  }
  return true;
}

}  // namespace tmw
