#include "psf/embedder.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace psf {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

// One forest component awaiting placement. Stars defer their leaves to a
// final bipartite matching; only the center is fixed during the search.
struct Comp {
  bool is_star;
  int vertices;  // path length, or a+1 for a star
  int param;     // path length, or leaf count a
  int orig;      // index into f.paths / f.stars
};

struct PlacedStar {
  int center;
  int a;
  int orig;
};

struct Solver {
  const Graph& g;
  const PathStarForest& f;
  int n;
  std::vector<Comp> comps;
  long long budget;

  uint64_t unused;
  int left;  // pattern vertices still unassigned, deferred leaves included
  std::vector<PlacedStar> centers;
  std::vector<std::vector<int>> path_hosts;  // by original path index
  std::optional<Embedding> found;

  Solver(const Graph& host, const PathStarForest& forest, long long b)
      : g(host), f(forest), n(host.order()), budget(b) {
    for (std::size_t i = 0; i < f.paths.size(); ++i)
      comps.push_back({false, f.paths[i], f.paths[i], static_cast<int>(i)});
    for (std::size_t j = 0; j < f.stars.size(); ++j)
      comps.push_back({true, f.stars[j] + 1, f.stars[j], static_cast<int>(j)});
    std::stable_sort(comps.begin(), comps.end(), [](const Comp& x, const Comp& y) {
      if (x.vertices != y.vertices) return x.vertices > y.vertices;
      return x.is_star && !y.is_star;  // stars first on ties
    });
    unused = host.vertex_mask();
    left = f.total_vertices();
    path_hosts.resize(f.paths.size());
  }

  void tick() {
    if (--budget < 0)
      throw EmbedBudgetExceeded("containment search exceeded its node budget");
  }

  // Swap-equivalence of two live host vertices: trying w after v failed is
  // redundant when some automorphism of g fixes every placed vertex and maps
  // w to v. Two cheap sufficient checks: the plain transposition (v w), and
  // the double transposition (v w)(a b) where a and b are the single private
  // neighbors of v and w (both still live) — this merges, for example, the
  // pendant edges of a matching block.
  bool interchangeable(int v, int w) const {
    uint64_t nv = g.neighbors(v), nw = g.neighbors(w);
    if ((nv & ~bit(w)) == (nw & ~bit(v))) return true;
    uint64_t x = nv & ~nw & ~bit(w);
    uint64_t y = nw & ~nv & ~bit(v);
    if (std::popcount(x) != 1 || std::popcount(y) != 1) return false;
    int a = std::countr_zero(x), b = std::countr_zero(y);
    if (!(unused & bit(a)) || !(unused & bit(b))) return false;
    // Rows of v/w already agree off {w, a} / {v, b}; a's row must match b's
    // under the same relabeling (cross pairs v-b and w-a are non-edges by
    // construction, and a-b is symmetric).
    return (g.neighbors(a) & ~(bit(v) | bit(b))) ==
           (g.neighbors(b) & ~(bit(w) | bit(a)));
  }

  std::vector<int> candidates(uint64_t pool) const {
    std::vector<int> out;
    for (uint64_t m = pool; m; m &= m - 1)
      out.push_back(std::countr_zero(m));
    std::stable_sort(out.begin(), out.end(), [&](int x, int y) {
      return std::popcount(g.neighbors(x) & unused) >
             std::popcount(g.neighbors(y) & unused);
    });
    return out;
  }

  // Can every already-placed center still collect its leaves from the
  // currently unused pool? Unit-slot bipartite matching (Kuhn).
  bool leaves_feasible(std::vector<std::vector<int>>* leaves_out) const {
    std::vector<int> slot_center;
    std::vector<int> slot_star;
    for (std::size_t s = 0; s < centers.size(); ++s)
      for (int t = 0; t < centers[s].a; ++t) {
        slot_center.push_back(centers[s].center);
        slot_star.push_back(static_cast<int>(s));
      }
    std::vector<int> match(n, -1);
    std::vector<char> visited(n, 0);
    auto augment = [&](auto&& self, int slot) -> bool {
      for (uint64_t m = g.neighbors(slot_center[slot]) & unused; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (visited[v]) continue;
        visited[v] = 1;
        if (match[v] < 0 || self(self, match[v])) {
          match[v] = slot;
          return true;
        }
      }
      return false;
    };
    for (std::size_t slot = 0; slot < slot_center.size(); ++slot) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, static_cast<int>(slot))) return false;
    }
    if (leaves_out) {
      leaves_out->assign(centers.size(), {});
      for (int v = 0; v < n; ++v)
        if (match[v] >= 0) (*leaves_out)[slot_star[match[v]]].push_back(v);
    }
    return true;
  }

  // Hub-demand bound. Vertices with fewer than three live neighbors cannot
  // center a star, and outside H = {unused v : live degree >= 3} the live
  // host has maximum degree <= 2, so it splits into pieces of at most c
  // vertices. A path on l vertices alternates hub visits with runs inside
  // one piece (run length <= c), hence needs at least floor(l / (c+1))
  // vertices of H; every star needs one for its center.
  bool fragment_bound_ok(std::size_t ci) const {
    uint64_t hubs = 0;
    for (uint64_t m = unused; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (std::popcount(g.neighbors(v) & unused) >= 3) hubs |= bit(v);
    }
    uint64_t rest = unused & ~hubs;
    int c = 0;
    for (uint64_t todo = rest; todo;) {
      uint64_t comp = todo & -todo;
      for (;;) {
        uint64_t grow = comp;
        for (uint64_t mm = comp; mm; mm &= mm - 1)
          grow |= g.neighbors(std::countr_zero(mm)) & rest;
        if (grow == comp) break;
        comp = grow;
      }
      c = std::max(c, std::popcount(comp));
      todo &= ~comp;
    }
    long long demand = 0;
    for (std::size_t k = ci; k < comps.size(); ++k)
      demand += comps[k].is_star ? 1 : comps[k].param / (c + 1);
    return demand <= std::popcount(hubs);
  }

  bool viable(std::size_t ci) const {
    if (std::popcount(unused) < left) return false;
    int amax = 0;
    int internal_needed = 0;  // path interiors need two live neighbors
    for (std::size_t k = ci; k < comps.size(); ++k) {
      if (comps[k].is_star)
        amax = std::max(amax, comps[k].param);
      else
        internal_needed += std::max(0, comps[k].param - 2);
    }
    if (amax > 0 || internal_needed > 0) {
      int cap = 0;
      int with_two = 0;
      for (uint64_t m = unused; m; m &= m - 1) {
        int deg = std::popcount(g.neighbors(std::countr_zero(m)) & unused);
        cap = std::max(cap, deg);
        if (deg >= 2) ++with_two;
      }
      if (cap < amax) return false;
      if (with_two < internal_needed) return false;
    }
    if (!fragment_bound_ok(ci)) return false;
    // Placed star centers may have lost leaf candidates to path placements.
    if (!centers.empty() && !leaves_feasible(nullptr)) return false;
    return true;
  }

  bool search(std::size_t ci) {
    if (ci == comps.size()) {
      std::vector<std::vector<int>> leaves;
      if (!leaves_feasible(&leaves)) return false;
      Embedding e;
      e.paths = path_hosts;
      e.stars.resize(f.stars.size());
      for (std::size_t s = 0; s < centers.size(); ++s) {
        e.stars[centers[s].orig].center = centers[s].center;
        e.stars[centers[s].orig].leaves = leaves[s];
      }
      found = std::move(e);
      return true;
    }
    if (!viable(ci)) return false;
    const Comp& c = comps[ci];
    if (c.is_star) {
      std::vector<int> tried;
      for (int v : candidates(unused)) {
        if (std::popcount(g.neighbors(v) & unused) < c.param) continue;
        bool skip = false;
        for (int w : tried)
          if (interchangeable(w, v)) {
            skip = true;
            break;
          }
        if (skip) continue;
        tried.push_back(v);
        tick();
        unused &= ~bit(v);
        --left;
        centers.push_back({v, c.param, c.orig});
        if (leaves_feasible(nullptr) && search(ci + 1)) return true;
        centers.pop_back();
        ++left;
        unused |= bit(v);
      }
      return false;
    }
    std::vector<int> seq;
    return extend_path(ci, seq);
  }

  bool extend_path(std::size_t ci, std::vector<int>& seq) {
    const Comp& c = comps[ci];
    if (static_cast<int>(seq.size()) == c.param) {
      path_hosts[c.orig] = seq;
      if (search(ci + 1)) return true;
      path_hosts[c.orig].clear();
      return false;
    }
    uint64_t pool = seq.empty() ? unused : (g.neighbors(seq.back()) & unused);
    std::vector<int> tried;
    for (int v : candidates(pool)) {
      bool skip = false;
      for (int w : tried)
        if (interchangeable(w, v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      tick();
      unused &= ~bit(v);
      --left;
      seq.push_back(v);
      if (extend_path(ci, seq)) return true;
      seq.pop_back();
      ++left;
      unused |= bit(v);
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> contains_forest(const Graph& g, const PathStarForest& f,
                                         long long budget) {
  if (f.total_vertices() > g.order()) return std::nullopt;
  Solver s(g, f, budget);
  s.search(0);
  return s.found;
}

bool reference_contains(const Graph& g, const PathStarForest& f) {
  if (g.order() > 12)
    throw std::invalid_argument("reference containment: host limited to 12 vertices");
  if (f.total_vertices() > g.order())
    throw std::invalid_argument("reference containment: pattern larger than host");
  int total = f.total_vertices();
  // For pattern position t, the earlier positions it must be adjacent to.
  std::vector<std::vector<int>> need(total);
  int pos = 0;
  for (int len : f.paths) {
    for (int i = 0; i < len; ++i, ++pos)
      if (i > 0) need[pos].push_back(pos - 1);
  }
  for (int a : f.stars) {
    int center = pos++;
    for (int i = 0; i < a; ++i, ++pos) need[pos].push_back(center);
  }
  std::vector<int> host(total, -1);
  uint64_t taken = 0;
  auto assign = [&](auto&& self, int t) -> bool {
    if (t == total) return true;
    for (int v = 0; v < g.order(); ++v) {
      if (taken & bit(v)) continue;
      bool ok = true;
      for (int u : need[t])
        if (!g.has_edge(host[u], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      host[t] = v;
      taken |= bit(v);
      if (self(self, t + 1)) return true;
      taken &= ~bit(v);
      host[t] = -1;
    }
    return false;
  };
  return assign(assign, 0);
}

bool embedding_valid(const Graph& g, const PathStarForest& f, const Embedding& e) {
  if (e.paths.size() != f.paths.size() || e.stars.size() != f.stars.size())
    return false;
  uint64_t seen = 0;
  auto take = [&](int v) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
    return true;
  };
  for (std::size_t i = 0; i < f.paths.size(); ++i) {
    const auto& seq = e.paths[i];
    if (static_cast<int>(seq.size()) != f.paths[i]) return false;
    for (std::size_t t = 0; t < seq.size(); ++t) {
      if (!take(seq[t])) return false;
      if (t > 0 && !g.has_edge(seq[t - 1], seq[t])) return false;
    }
  }
  for (std::size_t j = 0; j < f.stars.size(); ++j) {
    const auto& st = e.stars[j];
    if (static_cast<int>(st.leaves.size()) != f.stars[j]) return false;
    if (!take(st.center)) return false;
    for (int leaf : st.leaves) {
      if (!take(leaf)) return false;
      if (!g.has_edge(st.center, leaf)) return false;
    }
  }
  return true;
}

}  // namespace psf
