#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vcrit/coloring.hpp"
#include "vcrit/graph.hpp"

namespace vcrit {

/// chi(g) = k and chi(g - v) = k - 1 for every vertex v. pre: k >= 1.
bool is_k_vertex_critical(const Graph& g, int k);

enum class CriticalityVerdict { kCritical, kChromaticBelow, kChromaticAbove, kRemovableVertex };

struct CriticalityReport {
  CriticalityVerdict verdict = CriticalityVerdict::kCritical;
  int chromatic = 0;
  /// set for kRemovableVertex: a vertex whose deletion keeps chi = k
  int removable = -1;
};

CriticalityReport classify_criticality(const Graph& g, int k);

/// Distinct nonadjacent (a, b) with N(a) a subset of N(b); a is the dominated one.
std::optional<std::pair<int, int>> comparable_pair(const Graph& g);

/// Every comparable pair, in (a, b) lexicographic order.
std::vector<std::pair<int, int>> comparable_pairs(const Graph& g);

struct ComparableCliques {
  std::vector<int> a;  // a[i] is paired with b[i]
  std::vector<int> b;
};

/// Disjoint m-cliques A, B with N(a_i) \ A contained in N(b_i) \ B for each i.
/// Enumerates every m-clique, so it is meant for m <= 3.
std::optional<ComparableCliques> comparable_cliques(const Graph& g, int m);

struct DeletionWitness {
  int removed = -1;
  /// colouring of induced_subgraph(g, V - removed), vertices relabelled by increasing index
  Colouring colouring;
};

/// One (k-1)-colouring per deleted vertex. Throws when g is not k-vertex-critical.
std::vector<DeletionWitness> criticality_witnesses(const Graph& g, int k);

}  // namespace vcrit
