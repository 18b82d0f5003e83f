#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tmw/automorphism.hpp"
#include "tmw/canonical.hpp"
#include "tmw/contraction.hpp"
#include "tmw/enumeration.hpp"
#include "tmw/poset.hpp"
#include "tmw/rational.hpp"

namespace tmw {

struct Cone {
  CanonicalForm key;
  WeightedGraph representative;
  int dim = 0;  // number of edges
  BigInt aut_order = 1;
};

struct FaceLink {
  CanonicalForm from;              // the bigger cone
  std::vector<int> contract_edges; // edge ids of `from` realizing the face
  CanonicalForm to;                // the face, one dimension down
};

// One cone of edge lengths per iso-class, glued along single-edge
// contractions; the cone of a graph with k edges has dimension k, and the
// whole complex has dimension 3g-3+n.
struct ConeComplex {
  int genus = 0;
  int legs = 0;
  int total_dim = 0;
  std::vector<Cone> cones;       // sorted by key
  std::vector<FaceLink> faces;   // sorted by (from, to)
};

inline ConeComplex build_complex_from(const EnumerationResult& census) {
  ConeComplex cx;
  cx.genus = census.genus;
  cx.legs = census.legs;
  cx.total_dim = 3 * census.genus - 3 + census.legs;

  std::set<std::string> keys;
  for (const auto& cls : census.classes) keys.insert(cls.key.bytes);

  for (const auto& cls : census.classes) {
    Cone cone;
    cone.key = cls.key;
    cone.representative = cls.representative;
    cone.dim = static_cast<int>(cls.representative.edges().size());
    cone.aut_order = automorphism_group(cls.representative).order;
    cx.cones.push_back(std::move(cone));

    std::map<std::string, std::vector<int>> by_target;
    for (const auto& e : cls.representative.edges()) {
      const CanonicalForm target = canonical_form(contract_edge(cls.representative, e.id));
      if (!keys.count(target.bytes))
        throw InternalError("contraction left the enumerated census");
      by_target[target.bytes].push_back(e.id);
    }
    for (auto& [target, edge_ids] : by_target) {
      std::sort(edge_ids.begin(), edge_ids.end());
      cx.faces.push_back({cls.key, std::move(edge_ids), CanonicalForm{target}});
    }
  }
  return cx;
}

inline ConeComplex build_complex(int g, int n) {
  return build_complex_from(enumerate_stable_graphs(g, n));
}

// Face reachability in the complex: sigma_to is a face of sigma_from iff it
// is reachable along single-edge face links (reflexively).
inline bool is_face_of(const ConeComplex& cx, const CanonicalForm& to, const CanonicalForm& from) {
  if (to == from) return true;
  std::set<std::string> seen{from.bytes};
  std::vector<std::string> stack{from.bytes};
  while (!stack.empty()) {
    const std::string at = stack.back();
    stack.pop_back();
    for (const auto& link : cx.faces) {
      if (link.from.bytes != at) continue;
      if (link.to == to) return true;
      if (seen.insert(link.to.bytes).second) stack.push_back(link.to.bytes);
    }
  }
  return false;
}

struct ReversalReport {
  int genus = 0;
  int legs = 0;
  bool pass = false;
  int classes = 0;
  int matched_covers = 0;   // distinct (from, to) incidences agreeing on both sides
  long checked_pairs = 0;   // ordered pairs compared under all three relations
  std::vector<std::string> counterexamples;
};

// Verifies the order reversal between the two stratifications: for classes
// (A, B), "cone of B is a face of cone of A" <=> "A <= B in the contraction
// poset" <=> is_contraction_of(A, B); and each cone's dimension equals the
// corresponding stratum's codimension, the two summing to 3g-3+n.
inline ReversalReport check_order_reversal(int g, int n) {
  const EnumerationResult census = enumerate_stable_graphs(g, n);
  const ConeComplex cx = build_complex_from(census);

  ReversalReport report;
  report.genus = g;
  report.legs = n;
  report.classes = static_cast<int>(census.classes.size());

  if (census.classes.empty()) {
    report.pass = true;
    return report;
  }

  std::vector<WeightedGraph> reps;
  for (const auto& cls : census.classes) reps.push_back(cls.representative);
  const StrataPoset poset = build_strata_poset(reps);

  std::set<std::pair<std::string, std::string>> face_pairs;
  for (const auto& link : cx.faces) face_pairs.insert({link.from.bytes, link.to.bytes});
  std::set<std::pair<std::string, std::string>> cover_pairs;
  for (const auto& [from, to] : poset.covers) cover_pairs.insert({from.bytes, to.bytes});
  if (face_pairs != cover_pairs)
    report.counterexamples.push_back("single-edge face links and poset covers disagree");
  report.matched_covers = static_cast<int>(face_pairs.size());

  const int total = 3 * g - 3 + n;
  for (const auto& a : census.classes) {
    const int edges_a = static_cast<int>(a.representative.edges().size());
    const int cone_dim = edges_a;
    const int stratum_codim = poset.element(a.key).codim;
    const int stratum_dim = total - edges_a;
    if (cone_dim != stratum_codim || cone_dim + stratum_dim != total)
      report.counterexamples.push_back("dimension mismatch for class " + a.key.hex());
    for (const auto& b : census.classes) {
      ++report.checked_pairs;
      const bool face = is_face_of(cx, b.key, a.key);
      const bool le = poset_leq(poset, a.key, b.key);
      const bool contr = is_contraction_of(a.representative, b.representative);
      if (face != le || le != contr)
        report.counterexamples.push_back("relation mismatch for pair (" + a.key.hex() + ", " +
                                         b.key.hex() + ")");
    }
  }

  report.pass = report.counterexamples.empty();
  return report;
}

}  // namespace tmw
