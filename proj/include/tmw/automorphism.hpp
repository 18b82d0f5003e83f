#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tmw/canonical.hpp"
#include "tmw/graph.hpp"
#include "tmw/rational.hpp"

namespace tmw {

// A structure-preserving permutation of half-edge ids: genus, the pairing
// involution and every leg label are preserved, so it induces a vertex
// automorphism. Stored total (fixed points included).
struct HalfEdgePermutation {
  std::map<int, int> mapping;

  int apply(int half_edge_id) const { return mapping.at(half_edge_id); }

  friend bool operator<(const HalfEdgePermutation& a, const HalfEdgePermutation& b) {
    return a.mapping < b.mapping;
  }
  friend bool operator==(const HalfEdgePermutation& a, const HalfEdgePermutation& b) {
    return a.mapping == b.mapping;
  }
};

struct AutomorphismGroup {
  BigInt order = 1;
  std::vector<HalfEdgePermutation> generators;  // nontrivial; empty for trivial groups
};

namespace detail {

// All vertex automorphisms (as index permutations) of the dense view:
// bijections preserving genus, leg labels and edge multiplicities. Vertices
// carrying legs are fixed automatically because leg labels are globally
// distinct and enter the vertex colors.
inline std::vector<std::vector<int>> enumerate_vertex_automorphisms(const DenseGraph& d) {
  std::vector<int> color = initial_colors(d);
  refine_colors(d, color);
  std::vector<std::vector<int>> result;
  std::vector<int> image(d.n, -1);
  std::vector<bool> used(d.n, false);

  auto consistent = [&](int v, int w) {
    if (color[v] != color[w]) return false;
    for (int u = 0; u < d.n; ++u)
      if (image[u] >= 0 && d.mult[v][u] != d.mult[w][image[u]]) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int v) -> void {
    if (v == d.n) {
      result.push_back(image);
      return;
    }
    for (int w = 0; w < d.n; ++w) {
      if (used[w] || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = true;
      self(self, v + 1);
      image[v] = -1;
      used[w] = false;
    }
  };
  dfs(dfs, 0);
  return result;
}

inline std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

// Greedy reduction of a full element list to a generating subset.
inline std::vector<std::vector<int>> reduce_generators(
    const std::vector<std::vector<int>>& elements, int n) {
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  std::set<std::vector<int>> closure{identity};
  std::vector<std::vector<int>> gens;
  for (const auto& el : elements) {
    if (closure.count(el)) continue;
    gens.push_back(el);
    // rebuild closure with the new generator
    std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& x : frontier)
        for (const auto& gen : gens) {
          auto y = compose(gen, x);
          if (closure.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

inline BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

// Edges between a fixed unordered pair of vertex ids (or loops at a vertex
// when u == v), sorted by edge id.
inline std::vector<int> edges_between(const WeightedGraph& g, int u, int v) {
  std::vector<int> ids;
  for (const auto& e : g.edges()) {
    auto [a, b] = g.edge_ends(e.id);
    if ((a == u && b == v) || (a == v && b == u)) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline HalfEdgePermutation identity_half_edge_perm(const WeightedGraph& g) {
  HalfEdgePermutation p;
  for (const auto& h : g.half_edges()) p.mapping[h.id] = h.id;
  return p;
}

// Lifts a vertex automorphism to half-edges: parallel edges are matched in
// id order, the half-edge at u goes to the half-edge at sigma(u), loops are
// matched in id order without flipping. Legs are fixed pointwise.
inline HalfEdgePermutation lift_vertex_automorphism(const WeightedGraph& g, const DenseGraph& d,
                                                    const std::vector<int>& sigma) {
  HalfEdgePermutation p = identity_half_edge_perm(g);
  auto half_at = [&](const WeightedGraph::Edge& e, int vertex_id) {
    if (g.half_edge(e.half_a).vertex == vertex_id) return e.half_a;
    return e.half_b;
  };
  for (int i = 0; i < d.n; ++i) {
    for (int j = i; j < d.n; ++j) {
      if (d.mult[i][j] == 0) continue;
      const int u = d.vertex_ids[i], v = d.vertex_ids[j];
      const int su = d.vertex_ids[sigma[i]], sv = d.vertex_ids[sigma[j]];
      const auto src = edges_between(g, u, v);
      const auto dst = edges_between(g, su, sv);
      for (std::size_t k = 0; k < src.size(); ++k) {
        const auto& e = g.edge(src[k]);
        const auto& f = g.edge(dst[k]);
        if (i == j) {  // loop to loop, keep orientation
          p.mapping[e.half_a] = f.half_a;
          p.mapping[e.half_b] = f.half_b;
        } else {
          p.mapping[half_at(e, u)] = half_at(f, su);
          p.mapping[half_at(e, v)] = half_at(f, sv);
        }
      }
    }
  }
  return p;
}

}  // namespace detail

// Full automorphism group in the half-edge convention: loop reversals and
// permutations of parallel edges are nontrivial automorphisms, leg labels
// are fixed. Order equals the number of vertex automorphisms times m! per
// parallel class times l!*2^l per loop set.
inline AutomorphismGroup automorphism_group(const WeightedGraph& g) {
  require_connected(g);
  const detail::DenseGraph d = detail::DenseGraph::build(g);
  const auto vertex_autos = detail::enumerate_vertex_automorphisms(d);

  AutomorphismGroup group;
  group.order = static_cast<long>(vertex_autos.size());
  for (int i = 0; i < d.n; ++i) {
    const int loops = d.mult[i][i];
    if (loops > 0) {
      group.order *= detail::factorial(loops);
      group.order <<= loops;  // 2^loops loop reversals
    }
    for (int j = i + 1; j < d.n; ++j)
      if (d.mult[i][j] > 1) group.order *= detail::factorial(d.mult[i][j]);
  }

  for (const auto& sigma : detail::reduce_generators(vertex_autos, d.n))
    group.generators.push_back(detail::lift_vertex_automorphism(g, d, sigma));

  // Local generators: symmetric group on each parallel class / loop set,
  // plus one reversal per loop set (reversals of the other loops are
  // conjugates under the loop permutations).
  auto add_class_generators = [&](const std::vector<int>& ids, bool loops) {
    if (ids.empty()) return;
    const auto swap_edges = [&](HalfEdgePermutation& p, int ea, int eb) {
      const auto& a = g.edge(ea);
      const auto& b = g.edge(eb);
      if (loops) {
        p.mapping[a.half_a] = b.half_a;
        p.mapping[a.half_b] = b.half_b;
        p.mapping[b.half_a] = a.half_a;
        p.mapping[b.half_b] = a.half_b;
      } else {
        auto side = [&](const WeightedGraph::Edge& e, int vertex_id) {
          return g.half_edge(e.half_a).vertex == vertex_id ? e.half_a : e.half_b;
        };
        const auto [u, v] = g.edge_ends(ea);
        p.mapping[side(a, u)] = side(b, u);
        p.mapping[side(a, v)] = side(b, v);
        p.mapping[side(b, u)] = side(a, u);
        p.mapping[side(b, v)] = side(a, v);
      }
    };
    if (loops) {
      HalfEdgePermutation flip = detail::identity_half_edge_perm(g);
      const auto& e = g.edge(ids.front());
      flip.mapping[e.half_a] = e.half_b;
      flip.mapping[e.half_b] = e.half_a;
      group.generators.push_back(std::move(flip));
    }
    if (ids.size() >= 2) {
      HalfEdgePermutation t = detail::identity_half_edge_perm(g);
      swap_edges(t, ids[0], ids[1]);
      group.generators.push_back(std::move(t));
    }
    if (ids.size() >= 3) {
      // cycle (e0 e1 ... ek) as a product of transpositions applied left to right
      HalfEdgePermutation c = detail::identity_half_edge_perm(g);
      std::map<int, int> acc = c.mapping;
      for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
        HalfEdgePermutation t = detail::identity_half_edge_perm(g);
        swap_edges(t, ids[k], ids[k + 1]);
        std::map<int, int> next;
        for (const auto& [from, mid] : acc) next[from] = t.mapping.at(mid);
        acc = std::move(next);
      }
      c.mapping = std::move(acc);
      group.generators.push_back(std::move(c));
    }
  };

  for (int i = 0; i < d.n; ++i) {
    add_class_generators(detail::edges_between(g, d.vertex_ids[i], d.vertex_ids[i]), true);
    for (int j = i + 1; j < d.n; ++j)
      if (d.mult[i][j] > 0)
        add_class_generators(detail::edges_between(g, d.vertex_ids[i], d.vertex_ids[j]), false);
  }

  // Drop identity generators (a lifted trivial vertex automorphism is the
  // identity when there is nothing local to move).
  const auto id_perm = detail::identity_half_edge_perm(g);
  std::erase_if(group.generators,
                [&](const HalfEdgePermutation& p) { return p.mapping == id_perm.mapping; });
  return group;
}

}  // namespace tmw
