#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"
#include "tmw/tmw.hpp"

using namespace tmw;
using namespace tmw::test;

namespace {

NodalModel model_with(const WeightedGraph& g, const std::vector<ValuedSeries>& eqs) {
  std::map<int, ValuedSeries> node_eq;
  std::size_t i = 0;
  for (const auto& e : g.edges()) node_eq.emplace(e.id, eqs[i++ % eqs.size()]);
  return make_nodal_model(g, node_eq);
}

}  // namespace

TEST_CASE("trop_of_model reads off valuations", "[model]") {
  const auto t = ValuedSeries::monomial(1, 1);

  // all f_e = t: every length 1
  const auto m1 = model_with(theta(), {t});
  const auto c1 = trop_of_model(m1);
  for (const auto& e : c1.graph().edges()) CHECK(c1.length(e.id) == ExtRational(1));
  CHECK(genus(c1.graph()) == genus(theta()));

  // f = t^2 + t^5 on one edge: that edge has length 2
  const auto f = parse_series("1*t^2 + 1*t^5");
  const auto m2 = model_with(genus1_loop(), {f});
  const auto c2 = trop_of_model(m2);
  CHECK(c2.length(genus1_loop().edges().front().id) == ExtRational(2));

  // the zero series gives an infinite length
  const auto m3 = model_with(genus1_loop(), {ValuedSeries::zero()});
  CHECK(trop_of_model(m3).length(genus1_loop().edges().front().id) == ExtRational::infinity());
}

TEST_CASE("trop_of_model rejects non-nodes", "[model]") {
  const auto unit = parse_series("1 + 1*t");  // val 0
  CHECK_THROWS_WITH(trop_of_model(model_with(genus1_loop(), {unit})),
                    Catch::Matchers::ContainsSubstring("not a node"));
  const auto negval = ValuedSeries::monomial(1, -1);
  CHECK_THROWS_WITH(trop_of_model(model_with(genus1_loop(), {negval})),
                    Catch::Matchers::ContainsSubstring("valuation ring"));
}

TEST_CASE("model construction validation", "[model]") {
  std::map<int, ValuedSeries> missing;
  CHECK_THROWS_WITH(make_nodal_model(theta(), missing),
                    Catch::Matchers::ContainsSubstring("missing node equation"));

  const auto th = theta();
  std::map<int, ValuedSeries> stray;
  for (const auto& e : th.edges()) stray.emplace(e.id, ValuedSeries::monomial(1, 1));
  stray.emplace(99, ValuedSeries::monomial(1, 1));
  CHECK_THROWS_WITH(make_nodal_model(th, stray),
                    Catch::Matchers::ContainsSubstring("unknown edge id"));

  WeightedGraph unstable;
  const int v = unstable.add_vertex(0);
  const int e = unstable.add_edge(v, v);
  std::map<int, ValuedSeries> eq{{e, ValuedSeries::monomial(1, 1)}};
  CHECK_THROWS_MATCHES(make_nodal_model(unstable, eq), ValidationError,
                       Catch::Matchers::Message("unstable graph"));
}

TEST_CASE("tropicalization is invariant under unit rescaling", "[model][property]") {
  std::mt19937_64 rng(2718281);
  std::vector<WeightedGraph> pool{theta(), dumbbell(), loop_bridge(), two_loops(), genus1_loop()};
  for (const auto& cls : enumerate_stable_graphs(2, 1).classes)
    if (!cls.representative.edges().empty()) pool.push_back(cls.representative);

  for (const auto& graph : pool) {
    std::map<int, ValuedSeries> node_eq;
    for (const auto& e : graph.edges()) {
      auto f = random_series(rng);
      while (!(val(f) > ExtRational(0))) f = random_series(rng);  // keep val in (0, inf]
      node_eq.emplace(e.id, f);
    }
    const auto base = trop_of_model(make_nodal_model(graph, node_eq));

    for (int round = 0; round < 20; ++round) {
      std::map<int, ValuedSeries> rescaled;
      for (const auto& [id, f] : node_eq) rescaled.emplace(id, mul(f, random_unit(rng)));
      const auto scaled = trop_of_model(make_nodal_model(graph, rescaled));
      REQUIRE(scaled.lengths() == base.lengths());
    }
  }
}

TEST_CASE("tropicalization output is always a valid tropical curve", "[model][property]") {
  std::mt19937_64 rng(16180);
  for (const auto& cls : enumerate_stable_graphs(2, 0).classes) {
    const auto& graph = cls.representative;
    std::map<int, ValuedSeries> node_eq;
    for (const auto& e : graph.edges()) {
      auto f = random_series(rng);
      while (!(val(f) > ExtRational(0))) f = random_series(rng);
      node_eq.emplace(e.id, f);
    }
    const auto curve = trop_of_model(make_nodal_model(graph, node_eq));
    // re-validating through the factory must succeed
    CHECK_NOTHROW(make_tropical_curve(curve.graph(), curve.lengths()));
    CHECK(genus(curve.graph()) == genus(graph));
  }
}
