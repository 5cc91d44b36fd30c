#pragma once

#include <optional>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

/// map[p] is the host vertex that pattern vertex p lands on.
struct Embedding {
  std::vector<int> map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Injective, and edges and non-edges of the pattern are both preserved.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// Precompiled backtracking plan for one pattern; reusable across hosts.
class InducedMatcher {
 public:
  explicit InducedMatcher(Graph pattern);

  const Graph& pattern() const { return pattern_; }
  std::optional<Embedding> find(const Graph& host) const;
  /// Only embeddings whose image contains host vertex `anchor`.
  std::optional<Embedding> find_through(const Graph& host, int anchor) const;
  bool occurs_through(const Graph& host, int anchor) const { return find_through(host, anchor).has_value(); }

 private:
  struct Plan {
    std::vector<int> order;
    // adjacency of order[i] to order[j] for j < i, as a mask over positions
    std::vector<std::uint64_t> earlier_adjacent;
  };
  Plan make_plan(int start) const;
  bool extend(const Graph& host, const Plan& plan, const std::uint64_t* allowed, std::size_t depth,
              std::uint64_t used, std::vector<int>& image) const;
  std::optional<Embedding> run(const Graph& host, const Plan& plan, int anchor) const;

  Graph pattern_;
  Plan full_plan_;
  std::vector<Plan> anchored_plans_;  // one per orbit representative
};

/// pre: h.order() >= 1.
std::optional<Embedding> find_induced(const Graph& g, const Graph& h);

struct FamilyViolation {
  std::size_t pattern_index = 0;
  Embedding embedding;
};

/// First listed pattern that occurs, with its embedding; nullopt when g is a member.
std::optional<FamilyViolation> family_violation(const Graph& g, const std::vector<Graph>& forbidden);
bool is_family_member(const Graph& g, const std::vector<Graph>& forbidden);

/// Vertices outside s with at least one neighbour and one non-neighbour in s.
VertexSet mixed_vertices(const Graph& g, VertexSet s);

}  // namespace vcrit
