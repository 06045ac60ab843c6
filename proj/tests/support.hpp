#pragma once

#include "qspec/cotree.hpp"
#include "qspec/graph.hpp"

#include <random>
#include <string_view>

namespace qspec::test {

inline Graph cg(std::string_view expr) { return to_graph(parse_cotree(expr)); }

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph random_graph(std::mt19937& rng, int n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace qspec::test
