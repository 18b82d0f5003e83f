// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
// The brute-force oracles (exhaustive census generation, half-edge
// permutation search) are authoritative wherever the two sides disagree.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "test_support.hpp"
#include "tmw/tmw.hpp"

using namespace tmw;
using namespace tmw::test;

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion bodies ------------------------------------------------------

std::string genus2_census() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto census = enumerate_stable_graphs(2, 0);
  const double dt = seconds_since(t0);
  require(census.classes.size() == 7,
          "expected 7 classes, got " + str(census.classes.size()));
  const std::map<int, int> expected{{0, 1}, {1, 2}, {2, 2}, {3, 2}};
  require(census.counts_by_edges == expected, "counts_by_edges mismatch");
  require(counts_by_codim(census) == expected, "counts_by_codim mismatch");
  require(dt < 1.0, "runtime " + str(dt) + "s exceeds 1s");
  return "7 classes, counts {0:1,1:2,2:2,3:2}, " + str(dt) + "s";
}

std::string genus2_poset() {
  const auto census = enumerate_stable_graphs(2, 0);
  std::vector<WeightedGraph> reps;
  for (const auto& cls : census.classes) reps.push_back(cls.representative);
  const auto poset = build_strata_poset(reps);

  // pairwise single-edge-contraction brute force, recomputed here
  std::set<std::pair<std::string, std::string>> oracle;
  for (const auto& child : census.classes)
    for (const auto& parent : census.classes) {
      for (const auto& e : child.representative.edges()) {
        if (canonical_form(contract_edge(child.representative, e.id)) == parent.key) {
          oracle.insert({child.key.bytes, parent.key.bytes});
          break;
        }
      }
    }
  std::set<std::pair<std::string, std::string>> covers;
  for (const auto& [a, b] : poset.covers) covers.insert({a.bytes, b.bytes});
  require(covers == oracle, "covers differ from the brute-force oracle");
  require(covers.size() == 8, "expected 8 covers, got " + str(covers.size()));

  long checked = 0;
  for (std::size_t i = 0; i < census.classes.size(); ++i)
    for (std::size_t j = i + 1; j < census.classes.size(); ++j) {
      const auto& a = census.classes[i];
      const auto& b = census.classes[j];
      require(poset_leq(poset, a.key, b.key) ==
                  is_contraction_of(a.representative, b.representative),
              "closure vs is_contraction_of mismatch");
      require(poset_leq(poset, b.key, a.key) ==
                  is_contraction_of(b.representative, a.representative),
              "closure vs is_contraction_of mismatch");
      ++checked;
    }
  require(checked == 21, "expected 21 unordered pairs");
  return "8 covers match the oracle; closure agrees on all 21 pairs";
}

std::string genus3_census() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto census = enumerate_stable_graphs(3, 0);
  const double enum_dt = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const auto oracle = census_oracle(3, 0);
  const double oracle_dt = seconds_since(t1);

  std::set<std::string> impl;
  for (const auto& cls : census.classes) impl.insert(cls.key.bytes);
  require(impl == oracle, "genus-3 class sets differ (impl " + str(impl.size()) + ", oracle " +
                              str(oracle.size()) + ")");
  require(enum_dt < 30.0 && oracle_dt < 30.0, "runtime exceeds 30s");
  return str(impl.size()) + " classes agree with the exhaustive oracle (" + str(enum_dt) +
         "s / " + str(oracle_dt) + "s)";
}

std::string automorphism_orders() {
  require(count_half_edge_automorphisms(theta()) == 12, "theta oracle is not 12");
  require(count_half_edge_automorphisms(dumbbell()) == 8, "dumbbell oracle is not 8");
  require(automorphism_group(theta()).order == 12, "theta order is not 12");
  require(automorphism_group(dumbbell()).order == 8, "dumbbell order is not 8");

  int checked = 0;
  for (int g = 2; g <= 3; ++g)
    for (const auto& cls : enumerate_stable_graphs(g, 0).classes) {
      const BigInt oracle(count_half_edge_automorphisms(cls.representative));
      const BigInt impl = automorphism_group(cls.representative).order;
      require(impl == oracle, "order mismatch at genus " + str(g) + " class " + cls.key.hex() +
                                  ": impl " + impl.str() + ", oracle " + oracle.str());
      ++checked;
    }
  return "theta 12, dumbbell 8; all " + str(checked) + " genus-2/3 classes match the oracle";
}

std::string complex_shape() {
  const auto cx = build_complex(2, 0);
  int max_dim = 0, top = 0;
  for (const auto& cone : cx.cones) max_dim = std::max(max_dim, cone.dim);
  for (const auto& cone : cx.cones)
    if (cone.dim == max_dim) ++top;
  require(max_dim == 3, "maximal cone dimension is " + str(max_dim) + ", expected 3");
  require(cx.total_dim == 3, "total_dim is not 3");
  require(top == 2, "expected 2 top-dimensional cones, got " + str(top));

  for (int g = 1; g <= 4; ++g) {
    const auto complex_g = build_complex(g, 0);
    for (const auto& cone : complex_g.cones) {
      bool trivalent_genus0 = true;
      for (const auto& v : cone.representative.vertices())
        if (v.genus != 0 || valence(cone.representative, v.id) != 3) trivalent_genus0 = false;
      require((cone.dim == 3 * g - 3) == trivalent_genus0,
              "top-cone characterization fails at genus " + str(g));
    }
  }
  return "dim 3, 2 top cones; top cones = trivalent all-genus-0 classes for g <= 4";
}

std::string order_reversal() {
  std::string detail;
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {3, 0}}) {
    const auto report = check_order_reversal(g, n);
    require(report.pass, "reversal fails for (" + str(g) + "," + str(n) + "): " +
                             (report.counterexamples.empty() ? "?" : report.counterexamples.front()));
    if (g == 2 && n == 0)
      require(report.matched_covers == 8, "expected 8 matched covers at (2,0)");
    if (g == 1 && n == 1) require(report.matched_covers == 1, "expected 1 matched cover at (1,1)");
    detail += "(" + str(g) + "," + str(n) + "):" + str(report.matched_covers) + " ";
  }
  return "pass for (1,1),(2,0),(3,0); matched covers " + detail;
}

std::string valuation_laws() {
  std::mt19937_64 rng(987654321);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_series(rng);
    auto b = random_series(rng);
    while (a.is_zero()) a = random_series(rng);
    while (b.is_zero()) b = random_series(rng);
    require(val(mul(a, b)) == val(a) + val(b), "val(ab) != val(a)+val(b)");
    require(val(add(a, b)) >= min(val(a), val(b)), "ultrametric inequality fails");
    if (val(a) != val(b))
      require(val(add(a, b)) == min(val(a), val(b)),
              "equality fails although valuations differ");
  }
  return "val(ab) = val(a)+val(b) and the ultrametric law on 1000 random pairs";
}

std::string tropicalization() {
  std::mt19937_64 rng(13);

  // ten models over the genus-2 census and the (1,1) census
  std::vector<NodalModel> corpus;
  auto add_models = [&](const EnumerationResult& census) {
    for (const auto& cls : census.classes) {
      std::map<int, ValuedSeries> node_eq;
      int salt = 1;
      for (const auto& e : cls.representative.edges()) {
        switch (salt++ % 4) {
          case 0: node_eq.emplace(e.id, parse_series("1*t")); break;
          case 1: node_eq.emplace(e.id, parse_series("1*t^2 + 1*t^5")); break;
          case 2: node_eq.emplace(e.id, parse_series("3*t^(1/2)")); break;
          default: node_eq.emplace(e.id, ValuedSeries::zero()); break;
        }
      }
      corpus.push_back(make_nodal_model(cls.representative, node_eq));
    }
  };
  add_models(enumerate_stable_graphs(2, 0));
  add_models(enumerate_stable_graphs(1, 1));
  add_models(enumerate_stable_graphs(1, 2));
  require(corpus.size() >= 10, "model corpus is too small");
  corpus.resize(10);

  for (const auto& model : corpus) {
    const auto curve = trop_of_model(model);
    require(genus(curve.graph()) == genus(model.graph), "genus not preserved");
    for (const auto& e : model.graph.edges()) {
      // independent read of the valuation: the least exponent of the series
      const auto& f = model.node_eq.at(e.id);
      ExtRational expected = ExtRational::infinity();
      for (const auto& term : f.terms())
        expected = min(expected, ExtRational(term.exponent));
      require(curve.length(e.id) == expected, "length(e) != val(f_e)");
    }
    for (int round = 0; round < 20; ++round) {
      std::map<int, ValuedSeries> rescaled;
      for (const auto& [id, f] : model.node_eq) rescaled.emplace(id, mul(f, random_unit(rng)));
      const auto again = trop_of_model(make_nodal_model(model.graph, rescaled));
      require(again.lengths() == curve.lengths(), "unit rescaling changed the lengths");
    }
  }
  return "10 models: lengths = val(f_e), genus preserved, invariant under 20 unit rescalings";
}

std::string weierstrass_checks() {
  require(discriminant({Rational(-3), Rational(2)}) == 0, "Delta(-3,2) != 0");
  bool threw = false;
  try {
    j_invariant({Rational(-3), Rational(2)});
  } catch (const ValidationError&) {
    threw = true;
  }
  require(threw, "j(-3,2) did not report a singular curve");
  require(j_invariant({Rational(1), Rational(0)}) == 1, "j(1,0) != 1");

  std::mt19937_64 rng(1728);
  int checked = 0;
  while (checked < 100) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const WeierstrassCurve base{a, b};
    if (discriminant(base) == 0) continue;
    const Rational lam = random_rational(rng, 9, 7, /*nonzero=*/true);
    const WeierstrassCurve scaled{rational_pow(lam, 4) * a, rational_pow(lam, 6) * b};
    require(j_invariant(scaled) == j_invariant(base), "homogeneity fails");
    ++checked;
  }
  return "Delta(-3,2)=0 and singular; j(1,0)=1; homogeneity on 100 random scalings";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "genus-2 census", genus2_census},
      {2, "genus-2 poset", genus2_poset},
      {3, "genus-3 census vs oracle", genus3_census},
      {4, "automorphism orders vs oracle", automorphism_orders},
      {5, "complex shape", complex_shape},
      {6, "order reversal", order_reversal},
      {7, "valuation laws", valuation_laws},
      {8, "tropicalization", tropicalization},
      {9, "weierstrass", weierstrass_checks},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    try {
      const std::string detail = criterion.run();
      std::cout << "[PASS] " << criterion.number << ". " << criterion.name << ": " << detail
                << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "[FAIL] " << criterion.number << ". " << criterion.name << ": " << f.message
                << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << criterion.number << ". " << criterion.name
                << ": unexpected error: " << e.what() << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
