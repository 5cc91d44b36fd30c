#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "vcrit/graph6.hpp"
#include "vcrit/iso.hpp"
#include "vcrit/patterns.hpp"

using namespace vcrit;

TEST_CASE("relabelled cycles share a form") {
  CHECK(canonical_form(cycle_graph(5)) == canonical_form(relabel(cycle_graph(5), {0, 2, 4, 1, 3})));
  CHECK(parse_graph6(canonical_form(complete_graph(4)).graph6) == complete_graph(4));
}

TEST_CASE("isomorphism examples") {
  CHECK_FALSE(is_isomorphic(parse_pattern("paw"), parse_pattern("K3+P1")));
  CHECK(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  CHECK_FALSE(is_isomorphic(complete_graph(4), parse_pattern("diamond")));
  CHECK_FALSE(is_isomorphic(path_graph(3), path_graph(4)));
}

TEST_CASE("canonical form is invariant under random relabelling") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    const Graph h = relabel(g, oracle::random_permutation(n, rng));
    const CanonicalForm f = canonical_form(g);
    REQUIRE(f == canonical_form(h));
    const Graph decoded = parse_graph6(f.graph6);
    REQUIRE(canonical_form(decoded) == f);
    REQUIRE(decoded.edge_count() == g.edge_count());
  }
}

TEST_CASE("highly symmetric graphs") {
  std::mt19937_64 rng(3);
  const std::vector<Graph> cases = {
      Graph(40), complete_graph(40), cycle_graph(41), antihole(21),
      disjoint_union(cycle_graph(20), cycle_graph(20)),
      disjoint_union(complete_graph(10), disjoint_union(complete_graph(10), complete_graph(10))),
  };
  for (const Graph& g : cases) {
    const Graph h = relabel(g, oracle::random_permutation(g.order(), rng));
    CHECK(canonical_form(g) == canonical_form(h));
  }
  // Same degree sequence, different graphs.
  CHECK_FALSE(is_isomorphic(cycle_graph(12), disjoint_union(cycle_graph(6), cycle_graph(6))));
  CHECK_FALSE(is_isomorphic(cycle_graph(9), disjoint_union(cycle_graph(3), cycle_graph(6))));
}

TEST_CASE("labelling is a permutation and automorphisms preserve edges") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const CanonicalLabelling lab = canonical_labelling(g);
    std::vector<int> sorted = lab.order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) REQUIRE(sorted[i] == i);
    for (const auto& a : lab.automorphisms) REQUIRE(relabel(g, a) == g);
  }
  const std::vector<int> orbit = automorphism_orbits(cycle_graph(7));
  CHECK(std::all_of(orbit.begin(), orbit.end(), [](int o) { return o == 0; }));
  const std::vector<int> star = automorphism_orbits(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("counts of unlabelled graphs") {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) CHECK(all_graphs(n).size() == expected[n]);
  CHECK_THROWS_AS(all_graphs(9), GraphError);
}

TEST_CASE("exactness against all permutations on order five") {
  const std::vector<Graph> graphs = all_graphs(5);
  std::vector<oracle::Matrix> mats;
  for (const Graph& g : graphs) mats.push_back(oracle::matrix(g));
  std::mt19937_64 rng(1);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph shuffled = relabel(graphs[i], oracle::random_permutation(5, rng));
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      const bool naive = oracle::isomorphic(oracle::matrix(shuffled), mats[j]);
      REQUIRE(is_isomorphic(shuffled, graphs[j]) == naive);
      REQUIRE(naive == (i == j));
    }
  }
}

TEST_CASE("canonical_sorted orders by order then form and drops repeats") {
  const std::vector<Graph> sorted =
      canonical_sorted({cycle_graph(5), complete_graph(3), relabel(cycle_graph(5), {1, 0, 2, 3, 4}), Graph(1)});
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0].order() == 1);
  CHECK(sorted[1] == complete_graph(3));
  CHECK(is_isomorphic(sorted[2], cycle_graph(5)));
}
