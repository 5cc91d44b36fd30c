#pragma once

#include <random>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

/// G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Grows a graph one vertex at a time; each new vertex draws its
/// neighbourhood from Bernoulli(p) and redraws whenever that would create an
/// induced copy of a forbidden graph. Every prefix is a family member.
/// Throws std::runtime_error if a vertex is rejected `max_redraws` times in a row.
Graph random_family_member(int n, double p, const std::vector<Graph>& forbidden, std::mt19937_64& rng,
                           int max_redraws = 100000);

}  // namespace vcrit
