#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

/// graph6 word of the canonically relabelled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::string graph6;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabelling {
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<int> order;
  /// Automorphisms met during the search, as vertex maps. They are not
  /// guaranteed to generate the whole group; orbits built from them may be
  /// finer than the true orbits.
  std::vector<std::vector<int>> automorphisms;
};

/// Individualisation-refinement search over equitable ordered partitions with
/// automorphism pruning. The winning leaf is the one whose relabelled
/// adjacency matrix, read row by row, is lexicographically smallest.
CanonicalLabelling canonical_labelling(const Graph& g);

Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Orbit label (smallest member) per vertex, from the automorphisms found by
/// canonical_labelling.
std::vector<int> automorphism_orbits(const Graph& g);

inline constexpr int kMaxAllGraphsOrder = 8;

/// One canonical representative per isomorphism class of order n, sorted by
/// canonical form. Refuses n > 8.
std::vector<Graph> all_graphs(int n);

/// Sorts by (order, canonical form) and drops isomorphic duplicates; the
/// returned graphs are the canonical representatives.
std::vector<Graph> canonical_sorted(const std::vector<Graph>& graphs);

}  // namespace vcrit
