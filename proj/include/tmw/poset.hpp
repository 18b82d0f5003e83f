#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tmw/canonical.hpp"
#include "tmw/contraction.hpp"
#include "tmw/graph.hpp"

namespace tmw {

struct StratumRecord {
  CanonicalForm key;
  WeightedGraph representative;
  int codim = 0;  // number of edges
};

// Iso-classes of stable graphs of one genus and leg count, ordered by
// single-edge contraction: (child, parent) is a cover when contracting one
// edge of child gives parent, up to isomorphism.
struct StrataPoset {
  int genus = 0;
  int legs = 0;
  std::vector<StratumRecord> elements;                           // sorted by key
  std::vector<std::pair<CanonicalForm, CanonicalForm>> covers;   // (child, parent), sorted

  bool contains(const CanonicalForm& key) const {
    for (const auto& el : elements)
      if (el.key == key) return true;
    return false;
  }

  const StratumRecord& element(const CanonicalForm& key) const {
    for (const auto& el : elements)
      if (el.key == key) return el;
    throw ValidationError("unknown poset element " + key.hex());
  }
};

// Reflexive-transitive closure of the covers: child <= parent iff parent is
// reachable from child by contracting edges one at a time.
inline bool poset_leq(const StrataPoset& poset, const CanonicalForm& child,
                      const CanonicalForm& parent) {
  if (child == parent) return true;
  std::set<std::string> seen{child.bytes};
  std::vector<std::string> stack{child.bytes};
  while (!stack.empty()) {
    const std::string at = stack.back();
    stack.pop_back();
    for (const auto& [from, to] : poset.covers) {
      if (from.bytes != at) continue;
      if (to == parent) return true;
      if (seen.insert(to.bytes).second) stack.push_back(to.bytes);
    }
  }
  return false;
}

inline StrataPoset build_strata_poset(const std::vector<WeightedGraph>& graphs) {
  if (graphs.empty()) throw ValidationError("no graphs given");

  StrataPoset poset;
  bool first = true;
  std::map<std::string, StratumRecord> by_key;
  for (const auto& g : graphs) {
    g.validate();
    require_connected(g);
    if (!is_stable(g)) throw ValidationError("unstable graph in poset input");
    const int gg = genus(g);
    const int nn = static_cast<int>(g.legs().size());
    if (first) {
      poset.genus = gg;
      poset.legs = nn;
      first = false;
    } else if (gg != poset.genus) {
      throw ValidationError("mixed genus input");
    } else if (nn != poset.legs) {
      throw ValidationError("mixed leg count input");
    }
    CanonicalForm key = canonical_form(g);
    if (by_key.count(key.bytes))
      throw ValidationError("poset input graphs are not pairwise non-isomorphic");
    by_key[key.bytes] = {key, g, static_cast<int>(g.edges().size())};
  }

  for (auto& [bytes, rec] : by_key) poset.elements.push_back(std::move(rec));

  std::set<std::pair<std::string, std::string>> cover_set;
  for (const auto& el : poset.elements) {
    for (const auto& e : el.representative.edges()) {
      const CanonicalForm parent = canonical_form(contract_edge(el.representative, e.id));
      if (by_key.count(parent.bytes)) cover_set.insert({el.key.bytes, parent.bytes});
    }
  }
  for (const auto& [from, to] : cover_set)
    poset.covers.push_back({CanonicalForm{from}, CanonicalForm{to}});
  return poset;
}

}  // namespace tmw
