#include "vcrit/coloring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace vcrit {

namespace {

using Word = std::uint64_t;

// DSATUR backtracking. A colour c may be opened only when colours 0..c-1 are
// already in use, so permuted colourings are never revisited.
class Colourer {
 public:
  Colourer(const Graph& g, int k) : g_(g), n_(g.order()), k_(k) { colour_.fill(-1); }

  bool solve() { return step(0, 0); }

  Colouring result() const { return Colouring{std::vector<int>(colour_.begin(), colour_.begin() + n_)}; }

 private:
  bool step(int coloured, int used) {
    if (coloured == n_) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    Word pick_forbidden = 0;
    for (int v : VertexSet(VertexSet::first(n_).bits() & ~done_)) {
      Word forbidden = 0;
      for (int c = 0; c < used; ++c)
        if (g_.row(v) & classes_[c]) forbidden |= Word{1} << c;
      const int sat = std::popcount(forbidden);
      if (sat >= k_) return false;
      const int deg = std::popcount(g_.row(v) & ~done_);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_forbidden = forbidden;
      }
    }
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((pick_forbidden >> c) & 1U) continue;
      colour_[pick] = c;
      classes_[c] |= Word{1} << pick;
      done_ |= Word{1} << pick;
      if (step(coloured + 1, std::max(used, c + 1))) return true;
      classes_[c] &= ~(Word{1} << pick);
      done_ &= ~(Word{1} << pick);
      colour_[pick] = -1;
    }
    return false;
  }

  const Graph& g_;
  const int n_;
  const int k_;
  Word done_ = 0;
  std::array<Word, kMaxOrder> classes_{};
  std::array<int, kMaxOrder> colour_{};
};

// Maximum clique by branch and bound with a greedy-colouring bound.
class CliqueFinder {
 public:
  explicit CliqueFinder(const Graph& g) : g_(g) {}

  int solve() {
    expand(0, g_.vertices().bits());
    return best_;
  }

 private:
  void expand(int size, Word cand) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // colour classes of cand give an upper bound per prefix
    int order[kMaxOrder], bound[kMaxOrder], count = 0;
    Word left = cand;
    int colour = 0;
    while (left != 0) {
      ++colour;
      Word avail = left;
      while (avail != 0) {
        const int v = std::countr_zero(avail);
        avail &= ~g_.row(v) & ~(Word{1} << v);
        left &= ~(Word{1} << v);
        order[count] = v;
        bound[count] = colour;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      expand(size + 1, cand & g_.row(v));
      cand &= ~(Word{1} << v);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace

int Colouring::colours_used() const {
  int top = -1;
  for (int c : colours) top = std::max(top, c);
  return top + 1;
}

bool Colouring::is_proper(const Graph& g) const {
  if (static_cast<int>(colours.size()) != g.order()) return false;
  for (int c : colours)
    if (c < 0) return false;
  for (auto [u, v] : g.edges())
    if (colours[u] == colours[v]) return false;
  return true;
}

bool Colouring::is_proper_k(const Graph& g, int k) const {
  if (!is_proper(g)) return false;
  return std::all_of(colours.begin(), colours.end(), [k](int c) { return c < k; });
}

std::optional<Colouring> k_colourable(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = g.order();
  if (n == 0) return Colouring{};
  if (k == 0) return std::nullopt;
  if (k >= n) {
    Colouring c;
    for (int v = 0; v < n; ++v) c.colours.push_back(v);
    return c;
  }
  if (clique_lower_bound(g) > k) return std::nullopt;
  Colourer solver(g, k);
  if (!solver.solve()) return std::nullopt;
  return solver.result();
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = clique_lower_bound(g);; ++k)
    if (k_colourable(g, k)) return k;
}

int clique_number(const Graph& g) { return CliqueFinder(g).solve(); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

int clique_lower_bound(const Graph& g) {
  int best = 0;
  for (int start = 0; start < g.order(); ++start) {
    Word cand = g.row(start);
    int size = 1;
    while (cand != 0) {
      int pick = -1, pick_deg = -1;
      for (int v : VertexSet(cand)) {
        const int d = std::popcount(g.row(v) & cand);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      ++size;
      cand &= g.row(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace vcrit
