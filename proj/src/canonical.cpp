#include "psf/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace psf {

namespace {

// Compare the first `len` bits of two packed triangles.
int cmp_prefix(const std::array<std::uint64_t, 2>& a,
               const std::array<std::uint64_t, 2>& b, int len) {
  for (int w = 0; w < 2 && len > 0; ++w, len -= 64) {
    std::uint64_t mask =
        len >= 64 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - len);
    std::uint64_t x = a[w] & mask, y = b[w] & mask;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// Stable neighbor-color refinement (iterated degree sequences). Color ids are
// assigned by sorted signature, so they are isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::vector<std::vector<int>> key(n);
    for (int v = 0; v < n; ++v) {
      key[v].push_back(color[v]);
      std::vector<int> nbr;
      std::uint64_t m = g.neighbors(v);
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        nbr.push_back(color[u]);
      }
      std::sort(nbr.begin(), nbr.end());
      key[v].insert(key[v].end(), nbr.begin(), nbr.end());
    }
    std::vector<std::vector<int>> uniq(key.begin(), key.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), key[v]) - uniq.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct Search {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> cells;  // ordered by color id
  std::vector<int> cell_at_pos;
  std::vector<int> perm;
  std::vector<bool> used;
  std::array<std::uint64_t, 2> cur{};
  std::array<std::uint64_t, 2> best{};
  bool have_best = false;

  void set_bit(int k) { cur[k >> 6] |= std::uint64_t{1} << (63 - (k & 63)); }
  void clear_bit(int k) { cur[k >> 6] &= ~(std::uint64_t{1} << (63 - (k & 63))); }

  void dfs(int p) {
    if (p == n) {
      if (!have_best || cmp_prefix(cur, best, n * (n - 1) / 2) < 0) best = cur;
      have_best = true;
      return;
    }
    int base = p * (p - 1) / 2;
    for (int v : cells[cell_at_pos[p]]) {
      if (used[v]) continue;
      used[v] = true;
      perm[p] = v;
      for (int i = 0; i < p; ++i)
        if (g.has_edge(perm[i], v)) set_bit(base + i);
      // Orderings whose prefix already exceeds the incumbent cannot improve.
      if (!have_best || cmp_prefix(cur, best, base + p) <= 0) dfs(p + 1);
      for (int i = 0; i < p; ++i) clear_bit(base + i);
      used[v] = false;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int limit) {
  if (limit > 16) throw std::invalid_argument("canonical_form: limit above 16");
  int n = g.order();
  if (n > limit)
    throw std::invalid_argument("canonical_form: order exceeds limit");
  CanonicalForm out;
  out.n = n;
  if (n == 0) return out;

  std::vector<int> color = refine_colors(g);
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  Search s{g, n, {}, {}, std::vector<int>(n), std::vector<bool>(n, false)};
  s.cells.resize(classes);
  for (int v = 0; v < n; ++v) s.cells[color[v]].push_back(v);
  for (int c = 0; c < classes; ++c)
    for (std::size_t k = 0; k < s.cells[c].size(); ++k)
      s.cell_at_pos.push_back(c);
  s.dfs(0);
  out.bits = s.best;
  return out;
}

}  // namespace psf
