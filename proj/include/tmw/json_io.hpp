#pragma once

#include <json.hpp>

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tmw/complex.hpp"
#include "tmw/enumeration.hpp"
#include "tmw/graph.hpp"
#include "tmw/model.hpp"
#include "tmw/poset.hpp"
#include "tmw/rational.hpp"
#include "tmw/series.hpp"
#include "tmw/tropical.hpp"

namespace tmw {

using Json = nlohmann::json;

inline Json graph_to_json(const WeightedGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (const auto& v : g.vertices()) out["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  out["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    const auto [u, v] = g.edge_ends(e.id);
    out["edges"].push_back({{"id", e.id}, {"ends", Json::array({u, v})}});
  }
  out["legs"] = Json::array();
  for (const auto& l : g.legs()) {
    const int vertex = g.half_edge(l.half_edge).vertex;
    out["legs"].push_back({{"label", l.label}, {"vertex", vertex}});
  }
  return out;
}

inline WeightedGraph graph_from_json(const Json& j) {
  try {
    WeightedGraph g;
    for (const auto& v : j.at("vertices"))
      g.add_vertex_with_id(v.at("id").get<int>(), v.at("genus").get<int>());
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        const auto& ends = e.at("ends");
        if (ends.size() != 2) throw ValidationError("edge \"ends\" must list two vertex ids");
        g.add_edge_with_id(e.at("id").get<int>(), ends.at(0).get<int>(), ends.at(1).get<int>());
      }
    if (j.contains("legs"))
      for (const auto& l : j.at("legs"))
        g.add_leg(l.at("vertex").get<int>(), l.at("label").get<int>());
    g.validate();
    return g;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed graph JSON: ") + e.what());
  }
}

inline Json poset_to_json(const StrataPoset& poset) {
  Json out;
  out["genus"] = poset.genus;
  out["elements"] = Json::array();
  for (const auto& el : poset.elements)
    out["elements"].push_back({{"key", el.key.hex()},
                               {"codim", el.codim},
                               {"graph", graph_to_json(el.representative)}});
  out["covers"] = Json::array();
  for (const auto& [child, parent] : poset.covers)
    out["covers"].push_back(Json::array({child.hex(), parent.hex()}));
  return out;
}

inline Json enumeration_to_json(const EnumerationResult& result) {
  Json out;
  out["genus"] = result.genus;
  out["legs"] = result.legs;
  out["classes"] = Json::array();
  for (const auto& cls : result.classes)
    out["classes"].push_back({{"key", cls.key.hex()}, {"graph", graph_to_json(cls.representative)}});
  out["counts_by_edges"] = Json::object();
  for (const auto& [edges, count] : result.counts_by_edges)
    out["counts_by_edges"][std::to_string(edges)] = count;
  return out;
}

inline Json complex_to_json(const ConeComplex& cx) {
  Json out;
  out["genus"] = cx.genus;
  out["legs"] = cx.legs;
  out["dim"] = cx.total_dim;
  out["cones"] = Json::array();
  for (const auto& cone : cx.cones) {
    Json c{{"key", cone.key.hex()}, {"dim", cone.dim}};
    // JSON numbers stay exact up to 2^53; larger orders are emitted as strings
    if (cone.aut_order <= BigInt(1) << 53)
      c["autOrder"] = static_cast<std::int64_t>(cone.aut_order);
    else
      c["autOrder"] = cone.aut_order.str();
    out["cones"].push_back(std::move(c));
  }
  out["faces"] = Json::array();
  for (const auto& link : cx.faces)
    out["faces"].push_back(
        {{"from", link.from.hex()}, {"contract", link.contract_edges}, {"to", link.to.hex()}});
  return out;
}

inline Json tropical_curve_to_json(const TropicalCurve& t) {
  Json out = graph_to_json(t.graph());
  out["lengths"] = Json::object();
  for (const auto& [id, len] : t.lengths()) out["lengths"][std::to_string(id)] = to_string(len);
  return out;
}

inline TropicalCurve tropical_curve_from_json(const Json& j) {
  WeightedGraph g = graph_from_json(j);
  std::map<int, ExtRational> lengths;
  try {
    if (j.contains("lengths"))
      for (const auto& [key, value] : j.at("lengths").items())
        lengths.emplace(std::stoi(key), parse_ext_rational(value.get<std::string>()));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed tropical curve JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed tropical curve JSON: non-integer edge id key");
  }
  return make_tropical_curve(std::move(g), std::move(lengths));
}

inline Json model_to_json(const NodalModel& m) {
  Json out = graph_to_json(m.graph);
  out["node_eq"] = Json::object();
  for (const auto& [id, f] : m.node_eq) out["node_eq"][std::to_string(id)] = to_string(f);
  return out;
}

inline NodalModel model_from_json(const Json& j) {
  WeightedGraph g = graph_from_json(j);
  std::map<int, ValuedSeries> node_eq;
  try {
    if (j.contains("node_eq"))
      for (const auto& [key, value] : j.at("node_eq").items())
        node_eq.emplace(std::stoi(key), parse_series(value.get<std::string>()));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed model JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed model JSON: non-integer edge id key");
  }
  return make_nodal_model(std::move(g), std::move(node_eq));
}

inline Json reversal_report_to_json(const ReversalReport& report) {
  Json out;
  out["genus"] = report.genus;
  out["legs"] = report.legs;
  out["pass"] = report.pass;
  out["classes"] = report.classes;
  out["matched_covers"] = report.matched_covers;
  out["checked_pairs"] = report.checked_pairs;
  out["counterexamples"] = report.counterexamples;
  return out;
}

}  // namespace tmw
