#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tmw/graph.hpp"

namespace tmw {

// Relabeling-invariant byte encoding of a weighted leg-labeled multigraph.
// Two connected graphs have equal forms iff they are isomorphic (vertex and
// half-edge ids may move freely, marking labels may not).
struct CanonicalForm {
  std::string bytes;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xF]);
    }
    return out;
  }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes != b.bytes;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes < b.bytes;
  }
};

namespace detail {

// Index-dense view used by labeling, automorphism and isomorphism searches.
// mult[i][j] counts parallel edges between distinct indices; mult[i][i]
// counts loops.
struct DenseGraph {
  int n = 0;
  std::vector<int> genus;
  std::vector<int> valence;  // half-edges incl. legs; loops count twice
  std::vector<std::vector<int>> mult;
  std::vector<std::vector<int>> leg_labels;  // sorted
  std::vector<int> vertex_ids;               // index -> id
  std::map<int, int> index_of;               // id -> index

  static DenseGraph build(const WeightedGraph& g) {
    DenseGraph d;
    d.n = static_cast<int>(g.vertices().size());
    d.genus.resize(d.n);
    d.valence.assign(d.n, 0);
    d.mult.assign(d.n, std::vector<int>(d.n, 0));
    d.leg_labels.resize(d.n);
    d.vertex_ids.resize(d.n);
    int idx = 0;
    for (const auto& v : g.vertices()) {
      d.genus[idx] = v.genus;
      d.vertex_ids[idx] = v.id;
      d.index_of[v.id] = idx;
      ++idx;
    }
    for (const auto& h : g.half_edges()) ++d.valence[d.index_of.at(h.vertex)];
    for (const auto& e : g.edges()) {
      const auto [u, v] = g.edge_ends(e.id);
      const int i = d.index_of.at(u);
      const int j = d.index_of.at(v);
      if (i == j)
        ++d.mult[i][i];
      else {
        ++d.mult[i][j];
        ++d.mult[j][i];
      }
    }
    for (const auto& l : g.legs()) {
      const int v = g.half_edge(l.half_edge).vertex;
      d.leg_labels[d.index_of.at(v)].push_back(l.label);
    }
    for (auto& labels : d.leg_labels) std::sort(labels.begin(), labels.end());
    return d;
  }
};

// Colors are contiguous ranks 0..k-1; refinement only ever splits cells, and
// new ranks are ordered by (old rank, signature) so the cell order is stable.
inline std::vector<int> initial_colors(const DenseGraph& d) {
  using Key = std::tuple<int, int, int, std::vector<int>>;
  std::vector<Key> keys(d.n);
  for (int v = 0; v < d.n; ++v)
    keys[v] = {d.genus[v], d.valence[v], d.mult[v][v], d.leg_labels[v]};
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> color(d.n);
  for (int v = 0; v < d.n; ++v)
    color[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return color;
}

inline void refine_colors(const DenseGraph& d, std::vector<int>& color) {
  using Key = std::vector<int>;
  while (true) {
    std::vector<Key> keys(d.n);
    for (int v = 0; v < d.n; ++v) {
      Key key{color[v]};
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < d.n; ++u)
        if (u != v && d.mult[v][u] > 0) nb.emplace_back(color[u], d.mult[v][u]);
      std::sort(nb.begin(), nb.end());
      for (const auto& [c, m] : nb) {
        key.push_back(c);
        key.push_back(m);
      }
      keys[v] = std::move(key);
    }
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int before = 1 + *std::max_element(color.begin(), color.end());
    for (int v = 0; v < d.n; ++v)
      color[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    const int after = 1 + *std::max_element(color.begin(), color.end());
    if (after == before) return;
  }
}

inline void put_uint(std::string& out, unsigned long long x) {
  do {
    unsigned char byte = x & 0x7F;
    x >>= 7;
    if (x) byte |= 0x80;
    out.push_back(static_cast<char>(byte));
  } while (x);
}

// Byte encoding of the graph presented in a fixed vertex order
// (perm[pos] = index): vertex data first, then the lower-triangular
// multiplicity matrix with loops on the diagonal.
inline std::string encode_ordered(const DenseGraph& d, const std::vector<int>& perm) {
  std::string out;
  put_uint(out, d.n);
  for (int pos = 0; pos < d.n; ++pos) {
    const int v = perm[pos];
    put_uint(out, d.genus[v]);
    put_uint(out, d.leg_labels[v].size());
    for (int label : d.leg_labels[v]) put_uint(out, label);
  }
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j <= i; ++j) put_uint(out, d.mult[perm[i]][perm[j]]);
  return out;
}

struct LabelingSearch {
  const DenseGraph& d;
  std::string best;
  std::vector<int> best_perm;
  bool have_best = false;

  // Individualization-refinement with branching on the first non-singleton
  // cell; the minimum leaf encoding is the canonical form.
  void run(std::vector<int> color) {
    refine_colors(d, color);
    std::vector<std::vector<int>> cells(d.n);
    for (int v = 0; v < d.n; ++v) cells[color[v]].push_back(v);
    int target = -1;
    for (int c = 0; c < d.n; ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::vector<int> perm(d.n);
      for (int v = 0; v < d.n; ++v) perm[color[v]] = v;
      std::string enc = encode_ordered(d, perm);
      if (!have_best || enc < best) {
        best = std::move(enc);
        best_perm = std::move(perm);
        have_best = true;
      }
      return;
    }
    for (int v : cells[target]) {
      std::vector<int> child(color);
      for (int u = 0; u < d.n; ++u)
        if (u != v && child[u] >= target) ++child[u];
      run(std::move(child));
    }
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> order;  // canonical position -> vertex id
};

inline CanonicalLabeling canonical_labeling(const WeightedGraph& g) {
  require_connected(g);
  const DenseGraph d = DenseGraph::build(g);
  LabelingSearch search{d};
  search.run(initial_colors(d));
  CanonicalLabeling out;
  out.form.bytes = std::move(search.best);
  out.order.resize(d.n);
  for (int pos = 0; pos < d.n; ++pos) out.order[pos] = d.vertex_ids[search.best_perm[pos]];
  return out;
}

}  // namespace detail

inline CanonicalForm canonical_form(const WeightedGraph& g) {
  return detail::canonical_labeling(g).form;
}

inline bool is_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

// Concrete witness: vertex ids of `a` to vertex ids of `b`, edge ids of `a`
// to edge ids of `b` (parallel edges matched in id order).
struct GraphIsomorphism {
  std::map<int, int> vertex_map;
  std::map<int, int> edge_map;
};

inline std::optional<GraphIsomorphism> find_isomorphism(const WeightedGraph& a,
                                                        const WeightedGraph& b) {
  const auto la = detail::canonical_labeling(a);
  const auto lb = detail::canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;

  GraphIsomorphism iso;
  std::map<int, int> pos_a;  // vertex id of a -> canonical position
  for (int pos = 0; pos < static_cast<int>(la.order.size()); ++pos) {
    iso.vertex_map[la.order[pos]] = lb.order[pos];
    pos_a[la.order[pos]] = pos;
  }

  // Group edges by the canonical positions of their endpoints and match the
  // groups in edge-id order.
  auto grouped = [&](const WeightedGraph& g, const std::vector<int>& order) {
    std::map<int, int> pos;
    for (int p = 0; p < static_cast<int>(order.size()); ++p) pos[order[p]] = p;
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (const auto& e : g.edges()) {
      auto [u, v] = g.edge_ends(e.id);
      int pu = pos.at(u), pv = pos.at(v);
      if (pu > pv) std::swap(pu, pv);
      groups[{pu, pv}].push_back(e.id);
    }
    for (auto& [key, ids] : groups) std::sort(ids.begin(), ids.end());
    return groups;
  };
  const auto ga = grouped(a, la.order);
  const auto gb = grouped(b, lb.order);
  if (ga.size() != gb.size()) throw InternalError("isomorphism witness: group mismatch");
  for (const auto& [key, ids_a] : ga) {
    const auto it = gb.find(key);
    if (it == gb.end() || it->second.size() != ids_a.size())
      throw InternalError("isomorphism witness: multiplicity mismatch");
    for (std::size_t k = 0; k < ids_a.size(); ++k) iso.edge_map[ids_a[k]] = it->second[k];
  }
  return iso;
}

}  // namespace tmw
