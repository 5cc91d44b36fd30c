#include "vcrit/iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_set>

#include "vcrit/graph6.hpp"

namespace vcrit {

namespace {

using Word = std::uint64_t;

struct Partition {
  int ncells = 0;
  std::array<Word, kMaxOrder> cells{};
};

using Certificate = std::array<Word, kMaxOrder>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabelling run() {
    CanonicalLabelling out;
    if (n_ == 0) return out;
    Partition root;
    root.ncells = 1;
    root.cells[0] = VertexSet::first(n_).bits();
    Word queue[3 * kMaxOrder];
    queue[0] = root.cells[0];
    refine(root, queue, 1);
    search(root, 0);
    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    out.automorphisms.reserve(generators_.size());
    for (const auto& gen : generators_) out.automorphisms.emplace_back(gen.begin(), gen.begin() + n_);
    return out;
  }

 private:
  using Perm = std::array<signed char, kMaxOrder>;

  // Splits cells until every cell has a uniform neighbour count into every
  // splitter; new parts are ordered by that count so the result does not
  // depend on vertex names.
  void refine(Partition& p, Word* queue, int qlen) const {
    int head = 0;
    while (head < qlen && p.ncells < n_) {
      const Word w = queue[head++];
      for (int x = 0; x < p.ncells; ++x) {
        const Word cell = p.cells[x];
        if ((cell & (cell - 1)) == 0) continue;
        int counts[kMaxOrder];
        int lo = kMaxOrder, hi = -1;
        for (int v : VertexSet(cell)) {
          counts[v] = std::popcount(g_.row(v) & w);
          lo = std::min(lo, counts[v]);
          hi = std::max(hi, counts[v]);
        }
        if (lo == hi) continue;
        Word parts[kMaxOrder];
        int nparts = 0;
        for (int c = lo; c <= hi; ++c) {
          Word part = 0;
          for (int v : VertexSet(cell))
            if (counts[v] == c) part |= Word{1} << v;
          if (part != 0) parts[nparts++] = part;
        }
        for (int y = p.ncells - 1; y > x; --y) p.cells[y + nparts - 1] = p.cells[y];
        for (int i = 0; i < nparts; ++i) {
          p.cells[x + i] = parts[i];
          queue[qlen++] = parts[i];
        }
        p.ncells += nparts - 1;
        x += nparts - 1;
      }
    }
  }

  void leaf(const Partition& p) {
    std::array<int, kMaxOrder> order{};
    std::array<int, kMaxOrder> position{};
    for (int i = 0; i < n_; ++i) {
      order[i] = std::countr_zero(p.cells[i]);
      position[order[i]] = i;
    }
    Certificate cert{};
    for (int i = 0; i < n_; ++i) {
      Word row = 0;
      for (int u : g_.neighbours(order[i])) row |= Word{1} << (63 - position[u]);
      cert[i] = row;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_cert_ = best_cert_ = cert;
      first_order_ = best_order_ = order;
      return;
    }
    const auto cmp = [&](const Certificate& other) {
      return std::lexicographical_compare_three_way(cert.begin(), cert.begin() + n_, other.begin(),
                                                    other.begin() + n_);
    };
    if (cmp(first_cert_) == 0) {
      record_automorphism(order, first_order_);
      return;
    }
    const auto vs_best = cmp(best_cert_);
    if (vs_best == 0) {
      record_automorphism(order, best_order_);
    } else if (vs_best < 0) {
      best_cert_ = cert;
      best_order_ = order;
    }
  }

  void record_automorphism(const std::array<int, kMaxOrder>& from, const std::array<int, kMaxOrder>& to) {
    Perm gen{};
    for (int i = 0; i < n_; ++i) gen[from[i]] = static_cast<signed char>(to[i]);
    generators_.push_back(gen);
  }

  int find(std::array<int, kMaxOrder>& parent, int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void search(const Partition& p, int depth) {
    if (p.ncells == n_) {
      leaf(p);
      return;
    }
    int target = -1;
    for (int x = 0; x < p.ncells; ++x) {
      const int size = std::popcount(p.cells[x]);
      if (size > 1 && (target < 0 || size < std::popcount(p.cells[target]))) target = x;
    }
    const Word cell = p.cells[target];

    Word explored = 0;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::array<int, kMaxOrder> parent{};
    for (int v : VertexSet(cell)) {
      if (generators_.size() != gens_seen) {
        gens_seen = generators_.size();
        std::iota(parent.begin(), parent.begin() + n_, 0);
        for (const Perm& gen : generators_) {
          bool fixes = true;
          for (int d = 0; d < depth && fixes; ++d) fixes = gen[prefix_[d]] == prefix_[d];
          if (!fixes) continue;
          for (int u = 0; u < n_; ++u) {
            const int a = find(parent, u), b = find(parent, gen[u]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
      bool redundant = false;
      for (int u : VertexSet(explored))
        if (find(parent, u) == find(parent, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;

      Partition child;
      child.ncells = p.ncells + 1;
      for (int x = 0; x < target; ++x) child.cells[x] = p.cells[x];
      child.cells[target] = Word{1} << v;
      child.cells[target + 1] = cell & ~(Word{1} << v);
      for (int x = target + 1; x < p.ncells; ++x) child.cells[x + 1] = p.cells[x];
      Word queue[3 * kMaxOrder];
      queue[0] = Word{1} << v;
      refine(child, queue, 1);
      prefix_[depth] = v;
      search(child, depth + 1);
      explored |= Word{1} << v;
    }
  }

  const Graph& g_;
  const int n_;
  bool have_leaf_ = false;
  Certificate first_cert_{}, best_cert_{};
  std::array<int, kMaxOrder> first_order_{}, best_order_{};
  std::array<int, kMaxOrder> prefix_{};
  std::vector<Perm> generators_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) { return CanonSearch(g).run(); }

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labelling(g).order); }

CanonicalForm canonical_form(const Graph& g) { return {emit_graph6(canonical_graph(g))}; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_graph(g) == canonical_graph(h);
}

std::vector<int> automorphism_orbits(const Graph& g) {
  const CanonicalLabelling lab = canonical_labelling(g);
  std::vector<int> orbit(g.order());
  std::iota(orbit.begin(), orbit.end(), 0);
  const auto find = [&](int v) {
    while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
    return v;
  };
  for (const auto& gen : lab.automorphisms)
    for (int u = 0; u < g.order(); ++u) {
      const int a = find(u), b = find(gen[u]);
      if (a != b) orbit[std::max(a, b)] = std::min(a, b);
    }
  for (int v = 0; v < g.order(); ++v) orbit[v] = find(v);
  return orbit;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > kMaxAllGraphsOrder)
    throw GraphError("all_graphs is limited to orders 0.." + std::to_string(kMaxAllGraphsOrder));
  std::vector<Graph> level{Graph(0)};
  for (int m = 0; m < n; ++m) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (Word s = 0; s < (Word{1} << m); ++s) {
        Graph child = canonical_graph(add_vertex(g, VertexSet(s)));
        if (seen.insert(emit_graph6(child)).second) next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return canonical_sorted(level);
}

std::vector<Graph> canonical_sorted(const std::vector<Graph>& graphs) {
  std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (const Graph& g : graphs) {
    Graph c = canonical_graph(g);
    keyed.push_back({{c.order(), emit_graph6(c)}, c});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(keyed[i].second);
  return out;
}

}  // namespace vcrit
