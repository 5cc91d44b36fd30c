#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "vcrit/iso.hpp"
#include "vcrit/patterns.hpp"
#include "vcrit/search.hpp"

using namespace vcrit;

TEST_CASE("examples") {
  const Graph gem = parse_pattern("gem");
  const Graph paw = parse_pattern("paw");
  const auto e = find_induced(gem, paw);
  REQUIRE(e.has_value());
  CHECK(is_induced_embedding(gem, paw, *e));

  const Graph w5 = four_critical_cogem_free()[1];
  CHECK_FALSE(find_induced(w5, parse_pattern("co-gem")).has_value());

  const auto in_p6 = find_induced(path_graph(6), parse_pattern("co-gem"));
  REQUIRE(in_p6.has_value());
  CHECK(is_induced_embedding(path_graph(6), parse_pattern("co-gem"), *in_p6));

  CHECK_THROWS_AS(find_induced(gem, Graph(0)), std::invalid_argument);
}

TEST_CASE("family membership") {
  CHECK(is_family_member(cycle_graph(5), {parse_pattern("co-gem")}));
  const auto v = family_violation(path_graph(7), {parse_pattern("P5")});
  REQUIRE(v.has_value());
  CHECK(v->pattern_index == 0);
  CHECK(is_induced_embedding(path_graph(7), path_graph(5), v->embedding));
  const auto k = family_violation(complete_graph(5), {cycle_graph(5), complete_graph(4)});
  REQUIRE(k.has_value());
  CHECK(k->pattern_index == 1);
  CHECK(is_family_member(complete_graph(5), {}));
}

TEST_CASE("mixed vertices") {
  const Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(mixed_vertices(claw, VertexSet::of({1, 2, 3})).empty());
  CHECK(mixed_vertices(path_graph(4), VertexSet::of({0, 3})) == VertexSet::of({1, 2}));
  CHECK(mixed_vertices(cycle_graph(5), VertexSet::of({0, 2})).size() == 2);
  CHECK_THROWS_AS(mixed_vertices(claw, VertexSet()), std::invalid_argument);
}

TEST_CASE("agreement with subset enumeration on all graphs of order six") {
  const std::vector<Graph> hosts = all_graphs(6);
  const std::vector<Graph> patterns = catalog_order4();
  std::vector<oracle::Matrix> pm;
  for (const Graph& p : patterns) pm.push_back(oracle::matrix(p));
  std::mt19937_64 rng(6);
  for (const Graph& canonical_host : hosts) {
    // A shuffled copy so the host is not always in canonical labelling.
    const Graph host = relabel(canonical_host, oracle::random_permutation(6, rng));
    const oracle::Matrix hm = oracle::matrix(host);
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const auto e = find_induced(host, patterns[i]);
      REQUIRE(e.has_value() == oracle::contains_induced(hm, pm[i]));
      if (e) REQUIRE(is_induced_embedding(host, patterns[i], *e));
      const InducedMatcher matcher(patterns[i]);
      for (int anchor = 0; anchor < 6; ++anchor) {
        const auto t = matcher.find_through(host, anchor);
        bool naive = false;
        for (std::uint64_t s = 0; s < 64 && !naive; ++s) {
          const VertexSet set(s);
          if (set.size() != 4 || !set.contains(anchor)) continue;
          naive = oracle::isomorphic(oracle::induced(hm, set.to_vector()), pm[i]);
        }
        REQUIRE(t.has_value() == naive);
        if (t) {
          REQUIRE(is_induced_embedding(host, patterns[i], *t));
          REQUIRE(std::find(t->map.begin(), t->map.end(), anchor) != t->map.end());
        }
      }
    }
  }
}

TEST_CASE("disconnected patterns in larger random hosts") {
  std::mt19937_64 rng(8);
  const std::vector<Graph> patterns = {parse_pattern("co-gem"), parse_pattern("P3+P2"), parse_pattern("P3+2P1"),
                                       parse_pattern("paw+P1"), parse_pattern("2P2")};
  for (int trial = 0; trial < 300; ++trial) {
    const Graph host = oracle::random_graph(8, 0.5, rng);
    const oracle::Matrix hm = oracle::matrix(host);
    for (const Graph& p : patterns) {
      const auto e = find_induced(host, p);
      REQUIRE(e.has_value() == oracle::contains_induced(hm, oracle::matrix(p)));
      if (e) REQUIRE(is_induced_embedding(host, p, *e));
    }
  }
}
