#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vcrit/enumerate.hpp"
#include "vcrit/graph.hpp"

namespace vcrit {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subsets of {0..ground-1} as bit masks; duplicates allowed.
struct SetFamily {
  int ground = 0;
  std::vector<std::uint64_t> members;
};

inline constexpr std::size_t kMaxAntichainMembers = 64;

/// Largest sub-collection in which no member contains another. Exact
/// (maximum independent set of the containment graph); at most 64 members.
int max_antichain(const SetFamily& f);

/// Central binomial coefficient C(n, floor(n/2)); 0 <= n <= 62.
std::uint64_t sperner_bound(int n);

/// For a k-vertex-critical (co-gem, P5, P3+cP2)-free graph: no induced
/// P3 + c'P1 where c' = sperner_bound(k c). Throws PreconditionError when g
/// is not such a graph.
bool check_p3_cp2_consequence(const Graph& g, int k, int c);

/// For a vertex-critical (co-gem, paw+P1)-free graph: no induced P3 + 2P1.
bool check_paw_p1_consequence(const Graph& g);

/// Vertices mixed on s, one per class of equal traces on s (lowest index kept).
VertexSet mixed_class_representatives(const Graph& g, VertexSet s);

/// {N(x) & u : x in s}, with u's members renumbered 0..|u|-1 in increasing order.
SetFamily neighbourhood_traces(const Graph& g, VertexSet s, VertexSet u);

/// For an independent set s (|s| >= 2) of a graph without comparable
/// vertices: s is covered by N(U) and its traces on U are pairwise
/// incomparable, U being mixed_class_representatives(g, s).
bool check_neighbourhood_antichain(const Graph& g, VertexSet s);

/// chi(g) >= ceil(n / alpha(g)).
bool check_ratio_bound(const Graph& g);

/// (k+1)-vertex-critical graphs of order <= max_order avoiding co-gem, the odd
/// antiholes of orders 5..2k-5 and K_k. An empty list supports
/// k-colourability of the class on this slice. k >= 4.
EnumerationReport conjecture_slice(int k, int max_order, unsigned threads = 0);
std::vector<Graph> conjecture_family(int k);

/// Whether the k-vertex-critical (co-gem, bull)-free and (P3+P1)-free graphs
/// of order <= max_order coincide. k <= 6.
bool bull_equivalence(int k, int max_order, unsigned threads = 0);

}  // namespace vcrit
