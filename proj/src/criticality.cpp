#include "vcrit/criticality.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcrit {

namespace {

Graph delete_vertex(const Graph& g, int v) { return induced_subgraph(g, g.vertices() - VertexSet::single(v)); }

void cliques_of_size(const Graph& g, int m, std::uint64_t cand, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int v : VertexSet(cand)) {
    cur.push_back(v);
    const std::uint64_t higher = v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
    cliques_of_size(g, m, cand & g.row(v) & higher, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CriticalityReport classify_criticality(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("criticality needs k >= 1");
  CriticalityReport r;
  if (k_colourable(g, k - 1)) {
    r.verdict = CriticalityVerdict::kChromaticBelow;
    r.chromatic = chromatic_number(g);
    return r;
  }
  if (!k_colourable(g, k)) {
    r.verdict = CriticalityVerdict::kChromaticAbove;
    r.chromatic = chromatic_number(g);
    return r;
  }
  r.chromatic = k;
  for (int v = 0; v < g.order(); ++v) {
    if (!k_colourable(delete_vertex(g, v), k - 1)) {
      r.verdict = CriticalityVerdict::kRemovableVertex;
      r.removable = v;
      return r;
    }
  }
  return r;
}

bool is_k_vertex_critical(const Graph& g, int k) {
  return classify_criticality(g, k).verdict == CriticalityVerdict::kCritical;
}

std::vector<std::pair<int, int>> comparable_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (a != b && !g.adjacent(a, b) && g.neighbours(a).subset_of(g.neighbours(b))) out.emplace_back(a, b);
  return out;
}

std::optional<std::pair<int, int>> comparable_pair(const Graph& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (a != b && !g.adjacent(a, b) && g.neighbours(a).subset_of(g.neighbours(b))) return std::pair{a, b};
  return std::nullopt;
}

std::optional<ComparableCliques> comparable_cliques(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("clique size m must be >= 1");
  if (2 * m > g.order()) return std::nullopt;
  std::vector<std::vector<int>> cliques;
  std::vector<int> cur;
  cliques_of_size(g, m, g.vertices().bits(), cur, cliques);
  for (const auto& a : cliques) {
    VertexSet aset;
    for (int v : a) aset.insert(v);
    for (auto b : cliques) {
      VertexSet bset;
      for (int v : b) bset.insert(v);
      if (!(aset & bset).empty()) continue;
      // A is taken in increasing order; every pairing comes from permuting B.
      do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
          ok = (g.neighbours(a[i]) - aset).subset_of(g.neighbours(b[i]) - bset);
        if (ok) return ComparableCliques{a, b};
      } while (std::next_permutation(b.begin(), b.end()));
    }
  }
  return std::nullopt;
}

std::vector<DeletionWitness> criticality_witnesses(const Graph& g, int k) {
  if (!is_k_vertex_critical(g, k)) throw std::invalid_argument("graph is not k-vertex-critical");
  std::vector<DeletionWitness> out;
  for (int v = 0; v < g.order(); ++v) {
    auto c = k_colourable(delete_vertex(g, v), k - 1);
    out.push_back({v, std::move(*c)});
  }
  return out;
}

}  // namespace vcrit
