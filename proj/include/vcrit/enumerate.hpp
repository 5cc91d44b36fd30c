#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumerationConfig {
  int k = 0;
  std::vector<Graph> forbidden;
  int max_order = 0;
  /// Use "no comparable vertices in a critical graph" to steer expansion:
  /// a candidate with a comparable pair (a, b) only gets children whose new
  /// vertex is adjacent to a and not to b.
  bool prune_comparable = true;
  /// 1: comparable vertices only. 2: when no comparable pair exists, fall
  /// back to comparable disjoint edges (the m = 2 clique form).
  int lemma_clique_size = 1;
  /// Only connected children (critical graphs are connected). When off,
  /// the new vertex may be isolated.
  bool connected_only = true;
  /// Starting graphs; empty means {K1}. Every critical graph that contains
  /// one of them as an induced subgraph is found.
  std::vector<Graph> seeds;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

struct EnumerationStats {
  std::uint64_t expansions = 0;          // candidates whose children were generated
  std::uint64_t children = 0;            // neighbourhoods tried
  std::uint64_t duplicates = 0;          // children isomorphic to one already seen at that order
  std::uint64_t prune_family = 0;        // child contains a forbidden pattern
  std::uint64_t prune_chromatic = 0;     // chi reached k without being critical
  std::uint64_t prune_comparable = 0;    // neighbourhoods skipped by the comparable-pair rule
  std::uint64_t prune_degree_deadline = 0;  // some vertex can no longer reach degree k-1
  std::uint64_t truncated = 0;           // live candidates left at max_order
  std::vector<std::uint64_t> live_by_order;  // frontier size per order (index = order)
};

struct EnumerationReport {
  /// Canonical representatives sorted by (order, canonical graph6).
  std::vector<Graph> found;
  std::map<int, std::size_t> counts_by_order;
  /// True only when no candidate survived to max_order and no branch was cut
  /// by a max_order-dependent deadline, so the list is the whole class.
  bool complete = false;
  EnumerationStats stats;
};

void validate(const EnumerationConfig& cfg);

/// All k-vertex-critical graphs of order <= max_order that contain none of
/// the forbidden graphs as induced subgraphs, one per isomorphism class.
EnumerationReport enumerate_critical(const EnumerationConfig& cfg);

/// One-vertex extensions of g allowed by cfg (family membership at birth,
/// comparable-pair steering, degree deadline, connectivity), canonical and
/// free of isomorphic duplicates. Chromatic classification is left to the caller.
std::vector<Graph> expand(const Graph& g, const EnumerationConfig& cfg);

/// Independent oracle: filters all_graphs(m), m <= n, through family
/// membership and criticality. n <= 8.
std::vector<Graph> brute_force_critical(int k, const std::vector<Graph>& forbidden, int n);

}  // namespace vcrit
