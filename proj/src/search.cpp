#include "vcrit/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "vcrit/iso.hpp"

namespace vcrit {

namespace {

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t left = g.vertices().bits();
  while (left != 0) {
    std::uint64_t seen = left & -left, frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (int v : VertexSet(frontier)) next |= g.row(v);
      frontier = next & ~seen;
      seen |= next;
    }
    out.emplace_back(seen);
    left &= ~seen;
  }
  return out;
}

}  // namespace

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  const int m = pattern.order();
  if (static_cast<int>(e.map.size()) != m) return false;
  std::uint64_t used = 0;
  for (int x : e.map) {
    if (x < 0 || x >= host.order() || ((used >> x) & 1U)) return false;
    used |= std::uint64_t{1} << x;
  }
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      if (pattern.adjacent(p, q) != host.adjacent(e.map[p], e.map[q])) return false;
  return true;
}

InducedMatcher::InducedMatcher(Graph pattern) : pattern_(std::move(pattern)) {
  if (pattern_.order() == 0) throw std::invalid_argument("induced search needs a nonempty pattern");
  int start = 0;
  for (int v = 1; v < pattern_.order(); ++v)
    if (pattern_.degree(v) > pattern_.degree(start)) start = v;
  full_plan_ = make_plan(start);
  const std::vector<int> orbit = automorphism_orbits(pattern_);
  for (int v = 0; v < pattern_.order(); ++v)
    if (orbit[v] == v) anchored_plans_.push_back(make_plan(v));
}

// Greedy connectivity-first order: the start vertex's component first, then
// remaining components largest first; inside a component the next vertex is
// the one with most already-placed neighbours (ties: higher degree).
InducedMatcher::Plan InducedMatcher::make_plan(int start) const {
  const int m = pattern_.order();
  std::vector<VertexSet> comps = components(pattern_);
  std::stable_sort(comps.begin(), comps.end(), [&](VertexSet a, VertexSet b) {
    if (a.contains(start) != b.contains(start)) return a.contains(start);
    return a.size() > b.size();
  });
  Plan plan;
  std::uint64_t placed = 0;
  for (VertexSet comp : comps) {
    int first = start;
    if (!comp.contains(start)) {
      first = comp.lowest();
      for (int v : comp)
        if (pattern_.degree(v) > pattern_.degree(first)) first = v;
    }
    plan.order.push_back(first);
    placed |= std::uint64_t{1} << first;
    for (int added = 1; added < comp.size(); ++added) {
      int pick = -1, pick_links = -1;
      for (int v : comp - VertexSet(placed)) {
        const int links = std::popcount(pattern_.row(v) & placed);
        if (links > pick_links || (links == pick_links && pattern_.degree(v) > pattern_.degree(pick))) {
          pick = v;
          pick_links = links;
        }
      }
      plan.order.push_back(pick);
      placed |= std::uint64_t{1} << pick;
    }
  }
  for (int i = 0; i < m; ++i) {
    std::uint64_t mask = 0;
    for (int j = 0; j < i; ++j)
      if (pattern_.adjacent(plan.order[i], plan.order[j])) mask |= std::uint64_t{1} << j;
    plan.earlier_adjacent.push_back(mask);
  }
  return plan;
}

bool InducedMatcher::extend(const Graph& host, const Plan& plan, const std::uint64_t* allowed, std::size_t depth,
                            std::uint64_t used, std::vector<int>& image) const {
  if (depth == plan.order.size()) return true;
  std::uint64_t cand = allowed[plan.order[depth]] & ~used;
  const std::uint64_t adj = plan.earlier_adjacent[depth];
  for (std::size_t j = 0; j < depth && cand != 0; ++j) {
    const std::uint64_t r = host.row(image[j]);
    cand &= ((adj >> j) & 1U) ? r : ~r;
  }
  for (int x : VertexSet(cand)) {
    image[depth] = x;
    if (extend(host, plan, allowed, depth + 1, used | (std::uint64_t{1} << x), image)) return true;
  }
  return false;
}

std::optional<Embedding> InducedMatcher::run(const Graph& host, const Plan& plan, int anchor) const {
  const int m = pattern_.order();
  const int n = host.order();
  if (m > n) return std::nullopt;
  // Degree filters: a host vertex needs at least as many neighbours and
  // non-neighbours as the pattern vertex it receives.
  std::uint64_t allowed[kMaxOrder];
  for (int p = 0; p < m; ++p) {
    const int deg = pattern_.degree(p), non = m - 1 - deg;
    std::uint64_t mask = 0;
    for (int x = 0; x < n; ++x) {
      const int hd = host.degree(x);
      if (hd >= deg && n - 1 - hd >= non) mask |= std::uint64_t{1} << x;
    }
    allowed[p] = mask;
  }
  std::vector<int> image(m, -1);
  if (anchor >= 0) {
    const int p0 = plan.order[0];
    if (((allowed[p0] >> anchor) & 1U) == 0) return std::nullopt;
    image[0] = anchor;
    if (!extend(host, plan, allowed, 1, std::uint64_t{1} << anchor, image)) return std::nullopt;
  } else if (!extend(host, plan, allowed, 0, 0, image)) {
    return std::nullopt;
  }
  Embedding e;
  e.map.assign(m, -1);
  for (int i = 0; i < m; ++i) e.map[plan.order[i]] = image[i];
  return e;
}

std::optional<Embedding> InducedMatcher::find(const Graph& host) const { return run(host, full_plan_, -1); }

std::optional<Embedding> InducedMatcher::find_through(const Graph& host, int anchor) const {
  for (const Plan& plan : anchored_plans_)
    if (auto e = run(host, plan, anchor)) return e;
  return std::nullopt;
}

std::optional<Embedding> find_induced(const Graph& g, const Graph& h) { return InducedMatcher(h).find(g); }

std::optional<FamilyViolation> family_violation(const Graph& g, const std::vector<Graph>& forbidden) {
  for (std::size_t i = 0; i < forbidden.size(); ++i)
    if (auto e = find_induced(g, forbidden[i])) return FamilyViolation{i, std::move(*e)};
  return std::nullopt;
}

bool is_family_member(const Graph& g, const std::vector<Graph>& forbidden) {
  return !family_violation(g, forbidden).has_value();
}

VertexSet mixed_vertices(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("mixed_vertices needs a nonempty set");
  if (!s.subset_of(g.vertices())) throw GraphError("vertex set has members outside the graph");
  VertexSet out;
  for (int v : g.vertices() - s) {
    const VertexSet hit = g.neighbours(v) & s;
    if (!hit.empty() && hit != s) out.insert(v);
  }
  return out;
}

}  // namespace vcrit
