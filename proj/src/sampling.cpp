#include "vcrit/sampling.hpp"

#include <stdexcept>

#include "vcrit/search.hpp"

namespace vcrit {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

Graph random_family_member(int n, double p, const std::vector<Graph>& forbidden, std::mt19937_64& rng,
                           int max_redraws) {
  std::vector<InducedMatcher> matchers;
  for (const Graph& h : forbidden) matchers.emplace_back(h);
  std::bernoulli_distribution edge(p);
  Graph g(0);
  for (int v = 0; v < n; ++v) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == max_redraws) throw std::runtime_error("could not extend the sample inside the family");
      VertexSet nbrs;
      for (int u = 0; u < v; ++u)
        if (edge(rng)) nbrs.insert(u);
      Graph next = add_vertex(g, nbrs);
      bool ok = true;
      for (const auto& m : matchers)
        if (m.occurs_through(next, v)) {
          ok = false;
          break;
        }
      if (ok) {
        g = next;
        break;
      }
    }
  }
  return g;
}

}  // namespace vcrit
