#pragma once

// Slow, independent reference implementations. They only read adjacency
// through Graph::adjacent and never call library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "vcrit/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const vcrit::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

inline Matrix induced(const Matrix& m, const std::vector<int>& keep) {
  Matrix out(keep.size(), std::vector<bool>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out[i][j] = m[keep[i]][keep[j]];
  return out;
}

inline Matrix delete_vertex(const Matrix& m, int v) {
  std::vector<int> keep;
  for (int u = 0; u < static_cast<int>(m.size()); ++u)
    if (u != v) keep.push_back(u);
  return induced(m, keep);
}

// Tries every assignment in [0, k)^n.
inline bool colourable(const Matrix& m, int k) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<int> c(n, 0);
  while (true) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (m[u][v] && c[u] == c[v]) ok = false;
    if (ok) return true;
    int i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

inline int chromatic(const Matrix& m) {
  int k = 0;
  while (!colourable(m, k)) ++k;
  return k;
}

inline bool critical(const Matrix& m, int k) {
  if (chromatic(m) != k) return false;
  for (int v = 0; v < static_cast<int>(m.size()); ++v)
    if (chromatic(delete_vertex(m, v)) != k - 1) return false;
  return true;
}

// Every injective map from pattern vertices into host vertices.
inline bool contains_induced(const Matrix& host, const Matrix& pattern) {
  const int n = static_cast<int>(host.size()), p = static_cast<int>(pattern.size());
  if (p > n) return false;
  std::vector<int> subset(n, 0);
  std::fill(subset.begin(), subset.begin() + p, 1);
  do {
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v)
      if (subset[v]) chosen.push_back(v);
    std::sort(chosen.begin(), chosen.end());
    do {
      bool ok = true;
      for (int i = 0; i < p && ok; ++i)
        for (int j = i + 1; j < p && ok; ++j)
          if (pattern[i][j] != host[chosen[i]][chosen[j]]) ok = false;
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::prev_permutation(subset.begin(), subset.end()));
  return false;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  return contains_induced(a, b);
}

inline bool alpha_at_least(const Matrix& m, int size) {
  Matrix empty(size, std::vector<bool>(size));
  return contains_induced(m, empty);
}

// Bit-by-bit graph6 encoder written from the format description.
inline std::string graph6(const vcrit::Graph& g) {
  const int n = g.order();
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int value = 0;
    for (int t = 0; t < 6; ++t) value = value * 2 + bits[b + t];
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

inline vcrit::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  vcrit::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
