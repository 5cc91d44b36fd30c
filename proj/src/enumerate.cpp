#include "vcrit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "vcrit/coloring.hpp"
#include "vcrit/criticality.hpp"
#include "vcrit/graph6.hpp"
#include "vcrit/iso.hpp"
#include "vcrit/search.hpp"

namespace vcrit {

namespace {

using Word = std::uint64_t;

std::size_t key_words(int n) { return std::max<std::size_t>(1, (static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64); }

// Upper triangle in graph6 bit order.
void pack(const Graph& g, Word* out) {
  const int n = g.order();
  std::fill(out, out + key_words(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    const Word below = g.row(j) & ((Word{1} << j) - 1);
    for (int i = 0; i < j; ++i, ++k)
      if ((below >> i) & 1U) out[k / 64] |= Word{1} << (k % 64);
  }
}

Graph unpack(const Word* key, int n) {
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((key[k / 64] >> (k % 64)) & 1U) g.add_edge(i, j);
  return g;
}

Word hash_key(const Word* key, std::size_t words) {
  Word h = 0x9e3779b97f4a7c15ULL ^ words;
  for (std::size_t i = 0; i < words; ++i) {
    Word z = key[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return h;
}

// Open-addressing set of fixed-width keys stored contiguously.
class KeySet {
 public:
  explicit KeySet(std::size_t words) : words_(words), slots_(64, 0) {}

  // (index, inserted)
  std::pair<std::size_t, bool> insert(const Word* key, Word hash) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t h = hash & mask;; h = (h + 1) & mask) {
      const std::uint32_t slot = slots_[h];
      if (slot == 0) {
        arena_.insert(arena_.end(), key, key + words_);
        slots_[h] = static_cast<std::uint32_t>(++count_);
        return {count_ - 1, true};
      }
      if (std::equal(key, key + words_, arena_.data() + (slot - 1) * words_)) return {slot - 1, false};
    }
  }

  std::size_t size() const { return count_; }
  const Word* key(std::size_t i) const { return arena_.data() + i * words_; }

 private:
  void grow() {
    std::vector<std::uint32_t> bigger(slots_.size() * 2, 0);
    const std::size_t mask = bigger.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t h = hash_key(key(i), words_) & mask;
      while (bigger[h] != 0) h = (h + 1) & mask;
      bigger[h] = static_cast<std::uint32_t>(i + 1);
    }
    slots_ = std::move(bigger);
  }

  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<Word> arena_;
  std::vector<std::uint32_t> slots_;
};

constexpr int kShards = 64;

// All distinct candidates of one order, sharded by hash.
struct Level {
  explicit Level(int order) : n(order), words(key_words(order)) {
    for (int i = 0; i < kShards; ++i) shards.push_back(std::make_unique<Shard>(words));
  }
  struct Shard {
    explicit Shard(std::size_t w) : keys(w) {}
    std::mutex mu;
    KeySet keys;
    std::vector<std::uint8_t> live;
  };
  int n;
  std::size_t words;
  std::vector<std::unique_ptr<Shard>> shards;
};

// A neighbourhood S is allowed when it satisfies at least one alternative:
// must_in contained in S and must_out disjoint from S. No alternatives means
// no restriction.
struct Steering {
  std::vector<std::pair<Word, Word>> alternatives;
};

Steering steer(const Graph& g, const EnumerationConfig& cfg) {
  Steering s;
  if (!cfg.prune_comparable) return s;
  if (auto p = comparable_pair(g)) {
    s.alternatives.emplace_back(Word{1} << p->first, Word{1} << p->second);
    return s;
  }
  if (cfg.lemma_clique_size >= 2) {
    if (auto c = comparable_cliques(g, 2)) {
      for (int i = 0; i < 2; ++i) s.alternatives.emplace_back(Word{1} << c->a[i], Word{1} << c->b[i]);
    }
  }
  return s;
}

bool vertex_deleted_colourable(const Graph& g, int v, int colours) {
  return k_colourable(induced_subgraph(g, g.vertices() - VertexSet::single(v)), colours).has_value();
}

class Generator {
 public:
  explicit Generator(const EnumerationConfig& cfg) : cfg_(cfg) {
    for (const Graph& h : cfg.forbidden) matchers_.emplace_back(h);
  }

  // Calls fn(child) for every one-vertex extension of `parent` that passes
  // steering, deadlines, connectivity and family membership.
  template <typename Fn>
  void for_each_child(const Graph& parent, EnumerationStats& stats, Fn&& fn) const {
    const int n = parent.order();
    const int child_order = n + 1;
    const int spare = cfg_.max_order - child_order;  // vertices that may still follow the child
    const int need = cfg_.k - 1;
    const Word all = VertexSet::first(n).bits();

    Word needy = 0;
    for (int v = 0; v < n; ++v)
      if (parent.degree(v) + spare < need) needy |= Word{1} << v;
    const int min_new_degree = need - spare;

    ++stats.expansions;
    const Steering steering = steer(parent, cfg_);
    const std::uint64_t total = std::uint64_t{1} << n;

    const auto visit = [&](Word s) {
      ++stats.children;
      if (cfg_.connected_only && s == 0) return;
      if (std::popcount(s) < min_new_degree) {
        ++stats.prune_degree_deadline;
        return;
      }
      Graph child = add_vertex(parent, VertexSet(s));
      for (const InducedMatcher& m : matchers_)
        if (m.occurs_through(child, n)) {
          ++stats.prune_family;
          return;
        }
      fn(child);
    };

    if (steering.alternatives.size() == 1) {
      const auto [in, out] = steering.alternatives.front();
      const Word free = all & ~in & ~out;
      stats.prune_comparable += total - (std::uint64_t{1} << std::popcount(free));
      if (needy & out) {
        stats.prune_degree_deadline += std::uint64_t{1} << std::popcount(free);
        return;
      }
      const Word base = in | needy;
      const Word rest = free & ~needy;
      stats.prune_degree_deadline += (std::uint64_t{1} << std::popcount(free)) - (std::uint64_t{1} << std::popcount(rest));
      for (Word sub = 0;; sub = (sub - rest) & rest) {
        visit(base | sub);
        if (sub == rest) break;
      }
      return;
    }

    const Word rest = all & ~needy;
    stats.prune_degree_deadline += total - (std::uint64_t{1} << std::popcount(rest));
    for (Word sub = 0;; sub = (sub - rest) & rest) {
      const Word s = needy | sub;
      bool allowed = steering.alternatives.empty();
      for (const auto& [in, out] : steering.alternatives)
        if ((s & in) == in && (s & out) == 0) {
          allowed = true;
          break;
        }
      if (allowed) visit(s);
      else ++stats.prune_comparable;
      if (sub == rest) break;
    }
  }

 private:
  const EnumerationConfig& cfg_;
  std::vector<InducedMatcher> matchers_;
};

void merge(EnumerationStats& into, const EnumerationStats& from) {
  into.expansions += from.expansions;
  into.children += from.children;
  into.duplicates += from.duplicates;
  into.prune_family += from.prune_family;
  into.prune_chromatic += from.prune_chromatic;
  into.prune_comparable += from.prune_comparable;
  into.prune_degree_deadline += from.prune_degree_deadline;
  into.truncated += from.truncated;
}

class Enumerator {
 public:
  explicit Enumerator(const EnumerationConfig& cfg) : cfg_(cfg), gen_(cfg) {}

  EnumerationReport run() {
    EnumerationReport report;
    report.stats.live_by_order.assign(cfg_.max_order + 1, 0);

    std::map<int, std::unique_ptr<Level>> levels;
    const auto level_for = [&](int n) -> Level& {
      auto& slot = levels[n];
      if (!slot) slot = std::make_unique<Level>(n);
      return *slot;
    };

    std::vector<Graph> seeds = cfg_.seeds;
    if (seeds.empty()) seeds.emplace_back(1);
    EnumerationStats seed_stats;
    for (const Graph& s : seeds) {
      if (s.order() > cfg_.max_order || !is_family_member(s, cfg_.forbidden)) continue;
      if (s.order() == cfg_.max_order) {
        settle_final(s, seed_stats);
        continue;
      }
      insert(level_for(s.order()), canonical_graph(s), seed_stats);
    }
    merge(report.stats, seed_stats);

    for (int n = levels.empty() ? cfg_.max_order : levels.begin()->first; n < cfg_.max_order; ++n) {
      auto it = levels.find(n);
      if (it == levels.end()) continue;
      Level& current = *it->second;
      Parents parents{n, current.words, {}};
      for (auto& shard : current.shards)
        for (std::size_t i = 0; i < shard->keys.size(); ++i)
          if (shard->live[i]) {
            const Word* key = shard->keys.key(i);
            parents.keys.insert(parents.keys.end(), key, key + current.words);
          }
      report.stats.live_by_order[n] = parents.size();
      levels.erase(it);
      if (parents.size() == 0) continue;

      Level* next = n + 1 < cfg_.max_order ? &level_for(n + 1) : nullptr;
      run_level(parents, next, report.stats);
    }

    for (auto& [key, graph] : emitted_) report.found.push_back(graph);
    std::sort(report.found.begin(), report.found.end(), [](const Graph& a, const Graph& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return emit_graph6(a) < emit_graph6(b);
    });
    for (int n = 1; n <= cfg_.max_order; ++n) report.counts_by_order[n] = 0;
    for (const Graph& g : report.found) ++report.counts_by_order[g.order()];
    report.complete = report.stats.truncated == 0 && report.stats.prune_degree_deadline == 0;
    return report;
  }

 private:
  struct Parents {
    int n;
    std::size_t words;
    std::vector<Word> keys;
    std::size_t size() const { return keys.size() / words; }
  };

  void run_level(const Parents& parents, Level* next, EnumerationStats& total) {
    unsigned threads = cfg_.threads != 0 ? cfg_.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, parents.size()));
    std::atomic<std::size_t> cursor{0};
    std::vector<EnumerationStats> per_thread(threads);

    const auto work = [&](unsigned t) {
      EnumerationStats& stats = per_thread[t];
      constexpr std::size_t kChunk = 16;
      for (;;) {
        const std::size_t begin = cursor.fetch_add(kChunk);
        if (begin >= parents.size()) return;
        const std::size_t end = std::min(parents.size(), begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) {
          const Graph parent = unpack(parents.keys.data() + i * parents.words, parents.n);
          gen_.for_each_child(parent, stats, [&](const Graph& child) {
            if (next == nullptr) settle_final(child, stats);
            else insert(*next, canonical_graph(child), stats);
          });
        }
      }
    };

    if (threads <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (const auto& s : per_thread) merge(total, s);
  }

  // Child at max_order: never expanded, only checked for criticality.
  void settle_final(const Graph& g, EnumerationStats& stats) {
    if (k_colourable(g, cfg_.k - 1)) {
      ++stats.truncated;
      return;
    }
    classify_chromatic_k(canonical_graph(g), stats);
  }

  void insert(Level& level, const Graph& canon, EnumerationStats& stats) {
    std::vector<Word> key(level.words);
    pack(canon, key.data());
    const Word h = hash_key(key.data(), level.words);
    Level::Shard& shard = *level.shards[h >> 58];
    std::size_t index = 0;
    {
      std::lock_guard lock(shard.mu);
      auto [at, inserted] = shard.keys.insert(key.data(), h >> 6);
      if (!inserted) {
        ++stats.duplicates;
        return;
      }
      index = at;
      shard.live.push_back(0);
    }
    // Classification happens outside the lock; only this thread owns the new slot.
    if (!k_colourable(canon, cfg_.k - 1)) {
      classify_chromatic_k(canon, stats);
      return;
    }
    std::lock_guard lock(shard.mu);
    shard.live[index] = 1;
  }

  // chi(g) = k exactly here: every candidate was (k-1)-colourable before
  // gaining its last vertex.
  void classify_chromatic_k(const Graph& canon, EnumerationStats& stats) {
    for (int v = 0; v < canon.order(); ++v) {
      if (!vertex_deleted_colourable(canon, v, cfg_.k - 1)) {
        ++stats.prune_chromatic;
        return;
      }
    }
    if (!is_k_vertex_critical(canon, cfg_.k) || !is_family_member(canon, cfg_.forbidden))
      throw std::logic_error("enumerator produced an unsound critical graph");
    std::lock_guard lock(emit_mu_);
    emitted_.emplace(emit_graph6(canon), canon);
  }

  const EnumerationConfig& cfg_;
  Generator gen_;
  std::mutex emit_mu_;
  std::map<std::string, Graph> emitted_;
};

}  // namespace

void validate(const EnumerationConfig& cfg) {
  if (cfg.k < 2) throw ConfigError("k must be at least 2");
  if (cfg.max_order < cfg.k || cfg.max_order > kMaxOrder) throw ConfigError("max_order must lie in [k, 64]");
  for (const Graph& h : cfg.forbidden)
    if (h.order() == 0) throw ConfigError("forbidden graphs must be nonempty");
  if (cfg.lemma_clique_size < 1 || cfg.lemma_clique_size > 2) throw ConfigError("lemma_clique_size must be 1 or 2");
}

EnumerationReport enumerate_critical(const EnumerationConfig& cfg) {
  validate(cfg);
  return Enumerator(cfg).run();
}

std::vector<Graph> expand(const Graph& g, const EnumerationConfig& cfg) {
  validate(cfg);
  if (g.order() >= cfg.max_order) return {};
  Generator gen(cfg);
  EnumerationStats stats;
  KeySet seen(key_words(g.order() + 1));
  std::vector<Graph> out;
  std::vector<Word> key(key_words(g.order() + 1));
  gen.for_each_child(g, stats, [&](const Graph& child) {
    Graph canon = canonical_graph(child);
    pack(canon, key.data());
    if (seen.insert(key.data(), hash_key(key.data(), key.size())).second) out.push_back(canon);
  });
  return canonical_sorted(out);
}

std::vector<Graph> brute_force_critical(int k, const std::vector<Graph>& forbidden, int n) {
  if (n > kMaxAllGraphsOrder) throw ConfigError("brute force is limited to order 8");
  std::vector<Graph> out;
  for (int m = 1; m <= n; ++m)
    for (const Graph& g : all_graphs(m))
      if (is_family_member(g, forbidden) && is_k_vertex_critical(g, k)) out.push_back(g);
  return canonical_sorted(out);
}

}  // namespace vcrit
