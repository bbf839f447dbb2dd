#include "psf/oracle.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "psf/embedder.hpp"

namespace psf {

namespace {

struct SeedOut {
  bool searched = false;
  long long best = -1;
  std::vector<Graph> graphs;
  unsigned long long nodes = 0;
};

struct Search {
  const std::vector<std::pair<int, int>>& slots;
  const PathStarForest& f;
  long long f_edges;
  bool fits;   // forest can fit in n vertices at all
  bool prune;
  std::atomic<long long>& incumbent;
  SeedOut out;

  void raise(long long edges) {
    long long cur = incumbent.load(std::memory_order_relaxed);
    while (edges > cur &&
           !incumbent.compare_exchange_weak(cur, edges, std::memory_order_relaxed)) {
    }
  }

  void dfs(Graph& g, std::size_t idx, long long edges) {
    ++out.nodes;
    if (idx == slots.size()) {
      if (!prune && fits && contains_forest(g, f)) return;
      if (edges > out.best) {
        out.best = edges;
        out.graphs.clear();
      }
      if (edges == out.best) out.graphs.push_back(g);
      raise(edges);
      return;
    }
    if (prune) {
      long long remaining = static_cast<long long>(slots.size() - idx);
      // Strict: branches that can still tie the incumbent must be kept so the
      // extremal set comes out complete.
      if (edges + remaining < incumbent.load(std::memory_order_relaxed)) return;
    }
    auto [u, v] = slots[idx];
    g.add_edge(u, v);
    bool dead =
        prune && fits && edges + 1 >= f_edges && contains_forest(g, f).has_value();
    if (!dead) dfs(g, idx + 1, edges + 1);
    g.remove_edge(u, v);
    dfs(g, idx + 1, edges);
  }
};

}  // namespace

OracleResult exact_ex(int n, const PathStarForest& f, const OracleOptions& opt) {
  if (opt.limit > 9)
    throw std::invalid_argument("oracle: limit capped at 9 (search is exponential)");
  if (n < 0 || n > opt.limit)
    throw std::invalid_argument("oracle: n exceeds the configured limit");
  if (opt.disable_pruning && n > 6)
    throw std::invalid_argument("oracle: pruning-disabled mode limited to n <= 6");

  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  long long f_edges = 0;
  for (int l : f.paths) f_edges += l - 1;
  for (int a : f.stars) f_edges += a;
  bool fits = f.total_vertices() <= n;
  bool prune = !opt.disable_pruning;

  int k = std::min<int>(opt.split_depth, static_cast<int>(slots.size()));
  std::size_t seeds = std::size_t{1} << k;
  std::vector<SeedOut> results(seeds);
  std::atomic<long long> incumbent{-1};
  std::atomic<std::size_t> next{0};

  // Seed bit = 1 means the slot is absent, so ascending seed order matches the
  // sequential present-first visiting order.
  auto run_seed = [&](std::size_t seed) {
    Search s{slots, f, f_edges, fits, prune, incumbent, {}};
    s.out.searched = true;
    s.out.nodes = 1;
    Graph g = empty_graph(n);
    long long edges = 0;
    bool dead = false;
    for (int b = 0; b < k; ++b) {
      if ((seed >> (k - 1 - b)) & 1) continue;
      auto [u, v] = slots[b];
      g.add_edge(u, v);
      ++edges;
      if (prune && fits && edges >= f_edges && contains_forest(g, f)) {
        dead = true;
        break;
      }
    }
    if (!dead) s.dfs(g, static_cast<std::size_t>(k), edges);
    results[seed] = std::move(s.out);
  };

  auto worker = [&] {
    for (;;) {
      std::size_t seed = next.fetch_add(1);
      if (seed >= seeds) return;
      run_seed(seed);
    }
  };

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  long long best = 0;
  unsigned long long nodes = 0;
  for (const SeedOut& r : results) {
    best = std::max(best, r.best);
    nodes += r.nodes;
  }
  ExtremalSet set(n, best, "exhaustive-search");
  for (const SeedOut& r : results)
    if (r.best == best)
      for (const Graph& g : r.graphs) set.add(g);
  return OracleResult{n, f, best, std::move(set), nodes};
}

ExtremalSet extremal_collection(int n, const PathStarForest& f,
                                const OracleOptions& opt) {
  return exact_ex(n, f, opt).extremal;
}

}  // namespace psf
