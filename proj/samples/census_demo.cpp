// Enumerates the stable graphs of a small genus and prints the census with
// its contraction poset.

#include <iostream>

#include "tmw/tmw.hpp"

int main(int argc, char** argv) {
  const int g = argc > 1 ? std::atoi(argv[1]) : 2;

  const auto census = tmw::enumerate_stable_graphs(g, 0);
  std::cout << "genus " << g << ": " << census.classes.size() << " classes\n";
  for (const auto& cls : census.classes)
    std::cout << "  " << tmw::describe_graph(cls.representative)
              << "  aut order " << tmw::automorphism_group(cls.representative).order << "\n";

  std::vector<tmw::WeightedGraph> reps;
  for (const auto& cls : census.classes) reps.push_back(cls.representative);
  const auto poset = tmw::build_strata_poset(reps);
  std::cout << poset.covers.size() << " covering relations\n";

  const auto report = tmw::check_order_reversal(g, 0);
  std::cout << "order reversal: " << (report.pass ? "pass" : "FAIL") << "\n";
  return report.pass ? 0 : 1;
}
