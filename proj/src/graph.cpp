#include "vcrit/graph.hpp"

namespace vcrit {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loops are not allowed");
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(rows_[u] >> u >> 1 << u << 1)) out.emplace_back(u, v);
  return out;
}

bool Graph::well_formed() const {
  const std::uint64_t inside = VertexSet::first(n_).bits();
  for (int v = 0; v < kMaxOrder; ++v) {
    if (v >= n_) {
      if (rows_[v] != 0) return false;
      continue;
    }
    if ((rows_[v] & ~inside) != 0 || adjacent(v, v)) return false;
    for (int u : neighbours(v))
      if (!adjacent(u, v)) return false;
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v)
    if (a.rows_[v] != b.rows_[v]) return false;
  return true;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  const std::uint64_t all = VertexSet::first(n).bits();
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = all & ~g.row(v) & ~(std::uint64_t{1} << v);
    for (int u : VertexSet(row))
      if (u > v) h.add_edge(v, u);
  }
  return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  if (shift + h.order() > kMaxOrder) throw GraphError("disjoint union exceeds 64 vertices");
  Graph out(shift + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw GraphError("vertex set has members outside the graph");
  const std::vector<int> keep = s.to_vector();
  return relabel(g, keep);
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
  const int n = g.order();
  if (n >= kMaxOrder) throw GraphError("cannot add a vertex to a 64-vertex graph");
  if (!nbrs.subset_of(g.vertices())) throw GraphError("new neighbourhood names a missing vertex");
  Graph out = g;
  out.n_ = n + 1;
  out.rows_[n] = nbrs.bits();
  for (int u : nbrs) out.rows_[u] |= std::uint64_t{1} << n;
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  Graph out(m);
  std::array<int, kMaxOrder> position;
  position.fill(-1);
  for (int i = 0; i < m; ++i) {
    if (perm[i] < 0 || perm[i] >= g.order() || position[perm[i]] >= 0)
      throw GraphError("relabel needs distinct vertices of the graph");
    position[perm[i]] = i;
  }
  for (int i = 0; i < m; ++i) {
    std::uint64_t row = 0;
    for (int u : g.neighbours(perm[i]))
      if (position[u] >= 0) row |= std::uint64_t{1} << position[u];
    out.rows_[i] = row;
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= g.row(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == VertexSet::first(n).bits();
}

}  // namespace vcrit
