#pragma once

#include <optional>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

/// colours[v] in [0, k).
struct Colouring {
  std::vector<int> colours;

  int colours_used() const;
  bool is_proper(const Graph& g) const;
  /// Proper and every colour below k.
  bool is_proper_k(const Graph& g, int k) const;
};

/// Exact: returns a proper k-colouring or nullopt when none exists.
/// k = 0 on a nonempty graph gives nullopt.
std::optional<Colouring> k_colourable(const Graph& g, int k);

int chromatic_number(const Graph& g);
int independence_number(const Graph& g);
int clique_number(const Graph& g);

/// Size of a greedily grown clique; a lower bound on the clique number only.
int clique_lower_bound(const Graph& g);

}  // namespace vcrit
