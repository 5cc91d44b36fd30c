#include "vcrit/claims.hpp"

#include <map>
#include <set>

#include "vcrit/coloring.hpp"
#include "vcrit/criticality.hpp"
#include "vcrit/graph6.hpp"
#include "vcrit/patterns.hpp"
#include "vcrit/search.hpp"

namespace vcrit {

int max_antichain(const SetFamily& f) {
  if (f.members.size() > kMaxAntichainMembers) throw std::invalid_argument("max_antichain supports at most 64 members");
  const std::uint64_t ground = VertexSet::first(f.ground).bits();
  const int m = static_cast<int>(f.members.size());
  Graph comparable(m);
  for (int i = 0; i < m; ++i) {
    if (f.members[i] & ~ground) throw std::invalid_argument("family member outside the ground set");
    for (int j = i + 1; j < m; ++j) {
      const std::uint64_t a = f.members[i], b = f.members[j];
      if ((a & ~b) == 0 || (b & ~a) == 0) comparable.add_edge(i, j);
    }
  }
  return independence_number(comparable);
}

std::uint64_t sperner_bound(int n) {
  if (n < 0 || n > 62) throw std::invalid_argument("sperner_bound is defined here for 0 <= n <= 62");
  const int r = n / 2;
  std::uint64_t c = 1;
  // c = C(n - r + i, i) after step i; each division is exact.
  for (int i = 1; i <= r; ++i)
    c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * (n - r + i) / static_cast<unsigned>(i));
  return c;
}

bool check_p3_cp2_consequence(const Graph& g, int k, int c) {
  if (k < 1 || c < 0) throw PreconditionError("need k >= 1 and c >= 0");
  if (!is_k_vertex_critical(g, k)) throw PreconditionError("graph is not k-vertex-critical");
  const std::vector<Graph> family{parse_pattern("co-gem"), path_graph(5), realize({"P3+cP2", {c}})};
  if (!is_family_member(g, family)) throw PreconditionError("graph is not (co-gem, P5, P3+cP2)-free");
  if (k * c > 62) return true;  // c' would exceed any graph we can hold
  const std::uint64_t spread = sperner_bound(k * c);
  if (3 + spread > static_cast<std::uint64_t>(g.order())) return true;
  const Graph pattern = realize({"P3+lP1", {static_cast<int>(spread)}});
  return !find_induced(g, pattern).has_value();
}

bool check_paw_p1_consequence(const Graph& g) {
  if (g.order() == 0 || !is_k_vertex_critical(g, chromatic_number(g)))
    throw PreconditionError("graph is not vertex-critical");
  if (!is_family_member(g, {parse_pattern("co-gem"), parse_pattern("paw+P1")}))
    throw PreconditionError("graph is not (co-gem, paw+P1)-free");
  return !find_induced(g, parse_pattern("P3+2P1")).has_value();
}

VertexSet mixed_class_representatives(const Graph& g, VertexSet s) {
  std::set<std::uint64_t> traces;
  VertexSet u;
  for (int v : mixed_vertices(g, s))
    if (traces.insert((g.neighbours(v) & s).bits()).second) u.insert(v);
  return u;
}

SetFamily neighbourhood_traces(const Graph& g, VertexSet s, VertexSet u) {
  SetFamily f;
  f.ground = u.size();
  const std::vector<int> members = u.to_vector();
  for (int x : s) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (g.adjacent(x, members[i])) mask |= std::uint64_t{1} << i;
    f.members.push_back(mask);
  }
  return f;
}

bool check_neighbourhood_antichain(const Graph& g, VertexSet s) {
  if (s.size() < 2) throw PreconditionError("need at least two vertices in s");
  for (int x : s)
    if (!(g.neighbours(x) & s).empty()) throw PreconditionError("s is not independent");
  if (comparable_pair(g)) throw PreconditionError("graph has comparable vertices");
  const VertexSet u = mixed_class_representatives(g, s);
  VertexSet covered;
  for (int x : u) covered = covered | g.neighbours(x);
  if (!s.subset_of(covered)) return false;
  const SetFamily f = neighbourhood_traces(g, s, u);
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = 0; j < f.members.size(); ++j)
      if (i != j && (f.members[i] & ~f.members[j]) == 0) return false;
  return true;
}

bool check_ratio_bound(const Graph& g) {
  const int n = g.order();
  if (n == 0) return chromatic_number(g) == 0;
  const int alpha = independence_number(g);
  return chromatic_number(g) * alpha >= n;
}

std::vector<Graph> conjecture_family(int k) {
  if (k < 4) throw PreconditionError("conjecture slices need k >= 4");
  std::vector<Graph> family{parse_pattern("co-gem")};
  for (int j = 5; j <= 2 * k - 5; j += 2) family.push_back(antihole(j));
  family.push_back(complete_graph(k));
  return family;
}

EnumerationReport conjecture_slice(int k, int max_order, unsigned threads) {
  EnumerationConfig cfg;
  cfg.k = k + 1;
  cfg.forbidden = conjecture_family(k);
  cfg.max_order = max_order;
  cfg.threads = threads;
  return enumerate_critical(cfg);
}

bool bull_equivalence(int k, int max_order, unsigned threads) {
  if (k > 6) throw PreconditionError("bull equivalence is stated for k <= 6");
  EnumerationConfig cfg;
  cfg.k = k;
  cfg.max_order = max_order;
  cfg.threads = threads;
  cfg.forbidden = {parse_pattern("co-gem"), parse_pattern("bull")};
  const auto left = enumerate_critical(cfg).found;
  cfg.forbidden = {parse_pattern("P3+P1")};
  const auto right = enumerate_critical(cfg).found;
  return left == right;
}

}  // namespace vcrit
