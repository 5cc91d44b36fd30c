#include "vcrit/certify.hpp"

#include <algorithm>

#include "vcrit/criticality.hpp"
#include "vcrit/iso.hpp"
#include "vcrit/patterns.hpp"

namespace vcrit {

CriticalList::CriticalList(int k, std::vector<Graph> forbidden, const std::vector<Graph>& graphs,
                           Provenance provenance)
    : k_(k), forbidden_(std::move(forbidden)), provenance_(provenance) {
  if (k < 1) throw CertifyError("critical list needs k >= 1");
  for (const Graph& g : graphs) {
    if (!is_k_vertex_critical(g, k + 1)) throw CertifyError("listed graph is not (k+1)-vertex-critical");
    if (!is_family_member(g, forbidden_)) throw CertifyError("listed graph is outside the family");
  }
  graphs_ = canonical_sorted(graphs);
}

CriticalList shipped_cogem_list(int k) {
  const std::vector<Graph> family{parse_pattern("co-gem")};
  switch (k) {
    case 2:
      return CriticalList(2, family, {complete_graph(3), cycle_graph(5)}, Provenance::kShipped);
    case 3:
      return CriticalList(3, family, four_critical_cogem_free(), Provenance::kShipped);
    default:
      throw CertifyError("no shipped co-gem-free list for k = " + std::to_string(k));
  }
}

Certificate certify_colourable(const Graph& g, int k, const CriticalList& list) {
  if (k != list.k()) throw CertifyError("critical list was built for a different k");
  if (auto v = family_violation(g, list.forbidden()))
    return NotInFamily{v->pattern_index, list.forbidden()[v->pattern_index], std::move(v->embedding)};
  for (const Graph& c : list.graphs())
    if (auto e = find_induced(g, c)) return NotColourable{c, std::move(*e)};
  if (auto colouring = k_colourable(g, k)) return Colourable{std::move(*colouring)};
  throw IncompleteListError("graph is not " + std::to_string(k) +
                            "-colourable but contains no listed critical graph: the list is incomplete");
}

Verification verify_certificate(const Graph& g, int k, const Certificate& cert) {
  if (const auto* c = std::get_if<Colourable>(&cert)) {
    if (!c->colouring.is_proper(g)) return {false, "colouring is not proper"};
    if (!c->colouring.is_proper_k(g, k)) return {false, "colouring uses more than k colours"};
    return {true, {}};
  }
  if (const auto* c = std::get_if<NotColourable>(&cert)) {
    if (!is_induced_embedding(g, c->critical, c->embedding)) return {false, "embedding is not induced"};
    if (!is_k_vertex_critical(c->critical, k + 1)) return {false, "embedded graph is not (k+1)-vertex-critical"};
    return {true, {}};
  }
  const auto& c = std::get<NotInFamily>(cert);
  if (c.pattern.order() == 0) return {false, "empty pattern"};
  if (!is_induced_embedding(g, c.pattern, c.embedding)) return {false, "pattern embedding is not induced"};
  return {true, {}};
}

Colouring colour_cogem_k4free(const Graph& g) {
  static const std::vector<Graph> family{parse_pattern("co-gem"), complete_graph(4)};
  if (auto v = family_violation(g, family))
    throw FamilyViolationError(v->pattern_index == 0 ? "input contains a co-gem" : "input contains a K4", *v);
  auto colouring = k_colourable(g, 4);
  if (!colouring || !colouring->is_proper_k(g, 4))
    throw CertifyError("(co-gem, K4)-free graph without a 4-colouring: the 4-colourability result is falsified");
  return *colouring;
}

const char* verdict_name(const Certificate& cert) {
  switch (cert.index()) {
    case 0:
      return "Colourable";
    case 1:
      return "NotColourable";
    default:
      return "NotInFamily";
  }
}

}  // namespace vcrit
