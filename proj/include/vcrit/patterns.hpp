#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named forbidden graph, optionally from a parameterised family
/// ("K_k", "C_n", "P_n", "antihole_n", "P3+cP2", "P3+lP1").
struct PatternId {
  std::string name;
  std::vector<int> params;
};

Graph realize(const PatternId& id);

/// Accepts catalog names and disjoint-union expressions such as "K5",
/// "antihole_7", "P3+2P2", "paw+P1" or "3P1".
Graph parse_pattern(std::string_view text);

/// The eleven graphs of order four, with the fixed labellings of the
/// standard order-four table: 4P1, P2+2P1, P3+P1, 2P2, claw, P4, K3+P1,
/// paw, C4, diamond, K4.
std::vector<Graph> catalog_order4();
std::vector<std::string> catalog_order4_names();

/// Complement of C_n for odd n >= 5.
Graph antihole(int n);

/// Names understood without parameters, in listing order.
std::vector<std::string> catalog_names();

/// The nine 4-vertex-critical co-gem-free graphs (K4, W5, then seven of order 7).
std::vector<Graph> four_critical_cogem_free();

}  // namespace vcrit
