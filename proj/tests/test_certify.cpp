#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "vcrit/certify.hpp"
#include "vcrit/coloring.hpp"
#include "vcrit/patterns.hpp"
#include "vcrit/sampling.hpp"

using namespace vcrit;

TEST_CASE("shipped lists") {
  const CriticalList two = shipped_cogem_list(2);
  CHECK(two.graphs().size() == 2);
  CHECK(two.provenance() == Provenance::kShipped);
  const CriticalList three = shipped_cogem_list(3);
  CHECK(three.graphs().size() == 9);
  CHECK(three.k() == 3);
  CHECK_THROWS_AS(shipped_cogem_list(4), CertifyError);
}

TEST_CASE("lists are re-verified") {
  const std::vector<Graph> cogem{parse_pattern("co-gem")};
  CHECK_THROWS_AS(CriticalList(3, cogem, {cycle_graph(5)}, Provenance::kFile), CertifyError);
  CHECK_THROWS_AS(CriticalList(2, {cycle_graph(5)}, {cycle_graph(5)}, Provenance::kFile), CertifyError);
  CHECK_NOTHROW(CriticalList(2, cogem, {cycle_graph(5)}, Provenance::kEnumerated));
}

TEST_CASE("verdicts") {
  const CriticalList list = shipped_cogem_list(3);
  const Graph w5 = four_critical_cogem_free()[1];
  const Certificate a = certify_colourable(w5, 3, list);
  REQUIRE(std::holds_alternative<NotColourable>(a));
  CHECK(verify_certificate(w5, 3, a));
  CHECK(std::string(verdict_name(a)) == "NotColourable");

  const Certificate b = certify_colourable(cycle_graph(5), 3, list);
  REQUIRE(std::holds_alternative<Colourable>(b));
  CHECK(verify_certificate(cycle_graph(5), 3, b));

  const Certificate c = certify_colourable(path_graph(6), 3, list);
  REQUIRE(std::holds_alternative<NotInFamily>(c));
  CHECK(verify_certificate(path_graph(6), 3, c));
  CHECK(std::get<NotInFamily>(c).pattern_index == 0);

  CHECK_THROWS_AS(certify_colourable(cycle_graph(5), 2, list), CertifyError);
}

TEST_CASE("the smallest listed graph is reported") {
  // W5 plus a dominating vertex contains both K4 and W5
  const Graph g = add_vertex(four_critical_cogem_free()[1], VertexSet::first(6));
  const Certificate c = certify_colourable(g, 3, shipped_cogem_list(3));
  REQUIRE(std::holds_alternative<NotColourable>(c));
  CHECK(std::get<NotColourable>(c).critical == complete_graph(4));
}

TEST_CASE("an incomplete list is reported, not papered over") {
  const CriticalList partial(2, {parse_pattern("co-gem")}, {complete_graph(3)}, Provenance::kFile);
  CHECK_THROWS_AS(certify_colourable(cycle_graph(5), 2, partial), IncompleteListError);
}

TEST_CASE("tampered certificates are rejected") {
  const Graph c5 = cycle_graph(5);
  CHECK_FALSE(verify_certificate(c5, 3, Colourable{Colouring{{0, 0, 1, 0, 1}}}));
  CHECK_FALSE(verify_certificate(c5, 2, Colourable{Colouring{{0, 1, 0, 1, 2}}}));
  CHECK_FALSE(verify_certificate(c5, 2, NotColourable{complete_graph(3), {{0, 1, 2}}}));
  CHECK_FALSE(verify_certificate(c5, 3, NotColourable{cycle_graph(5), {{0, 1, 2, 3, 4}}}));
  CHECK_FALSE(verify_certificate(c5, 3, NotInFamily{0, path_graph(3), {{0, 1, 3}}}));
  CHECK(verify_certificate(c5, 3, NotInFamily{0, path_graph(3), {{0, 1, 2}}}));
  const Verification v = verify_certificate(c5, 3, Colourable{Colouring{{0, 0, 1, 0, 1}}});
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("certify then verify on random co-gem-free graphs") {
  std::mt19937_64 rng(31);
  const CriticalList list = shipped_cogem_list(3);
  const std::vector<Graph> family{parse_pattern("co-gem")};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 14)(rng);
    const Graph g = random_family_member(n, 0.5, family, rng);
    const Certificate c = certify_colourable(g, 3, list);
    REQUIRE(verify_certificate(g, 3, c));
    REQUIRE_FALSE(std::holds_alternative<NotInFamily>(c));
    REQUIRE(std::holds_alternative<Colourable>(c) == k_colourable(g, 3).has_value());
  }
}

TEST_CASE("four-colouring (co-gem, K4)-free graphs") {
  CHECK(colour_cogem_k4free(cycle_graph(5)).is_proper_k(cycle_graph(5), 4));
  CHECK_THROWS_AS(colour_cogem_k4free(complete_graph(4)), FamilyViolationError);
  try {
    colour_cogem_k4free(path_graph(6));
    FAIL("expected a family violation");
  } catch (const FamilyViolationError& e) {
    CHECK(e.violation().pattern_index == 0);
  }
  std::mt19937_64 rng(16);
  const std::vector<Graph> family{parse_pattern("co-gem"), complete_graph(4)};
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_family_member(16, 0.5, family, rng);
    REQUIRE(colour_cogem_k4free(g).is_proper_k(g, 4));
  }
}
