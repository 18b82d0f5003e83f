// Builds a nodal model over the theta graph and prints its tropical curve.

#include <iostream>

#include "tmw/tmw.hpp"

int main() {
  tmw::WeightedGraph theta;
  const int a = theta.add_vertex(0);
  const int b = theta.add_vertex(0);
  const int e1 = theta.add_edge(a, b);
  const int e2 = theta.add_edge(a, b);
  const int e3 = theta.add_edge(a, b);

  const auto model = tmw::make_nodal_model(
      theta, {{e1, tmw::parse_series("1*t")},
              {e2, tmw::parse_series("1*t^2 + 1*t^5")},
              {e3, tmw::parse_series("2*t^(3/2) - 1*t^4")}});

  const auto curve = tmw::trop_of_model(model);
  std::cout << tmw::tropical_curve_to_json(curve).dump(2) << "\n";

  // shrinking the first edge to zero length contracts it
  const auto limit = tmw::specialize(curve, {e1});
  std::cout << "after specializing e1: " << tmw::describe_graph(limit.graph()) << "\n";
  return 0;
}
