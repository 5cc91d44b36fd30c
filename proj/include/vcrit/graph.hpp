#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcrit {

inline constexpr int kMaxOrder = 64;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of vertex indices packed into one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on at most 64 vertices; one adjacency word per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Symmetric, loop-free, and nothing stored beyond the first n bits/rows.
  bool well_formed() const;

  friend bool operator==(const Graph& a, const Graph& b);
  friend Graph add_vertex(const Graph& g, VertexSet nbrs);
  friend Graph relabel(const Graph& g, const std::vector<int>& perm);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Subgraph induced by `s`, relabelled by increasing original index.
Graph induced_subgraph(const Graph& g, VertexSet s);
/// Appends vertex g.order() adjacent exactly to `nbrs`.
Graph add_vertex(const Graph& g, VertexSet nbrs);
/// Vertex i of the result is vertex perm[i] of g.
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool is_connected(const Graph& g);

}  // namespace vcrit
