#include "psf/constructions.hpp"

#include <sstream>
#include <stdexcept>

#include "psf/canonical.hpp"
#include "psf/embedder.hpp"
#include "psf/formulas.hpp"
#include "psf/graph6.hpp"

namespace psf {

ExtremalSet::ExtremalSet(int order, long long claimed_value, std::string family_tag)
    : order_(order), claimed_value_(claimed_value), family_tag_(std::move(family_tag)) {
  if (order < 0 || order > Graph::kMaxVertices)
    throw std::invalid_argument("extremal set: order out of range");
}

std::string ExtremalSet::key(const Graph& g) const {
  if (order_ <= kDefaultCanonLimit) {
    CanonicalForm c = canonical_form(g);
    std::ostringstream os;
    os << "C:" << c.n << ':' << std::hex << c.bits[0] << ':' << c.bits[1];
    return os.str();
  }
  return "L:" + graph6_encode(g);
}

bool ExtremalSet::add(const Graph& g) {
  if (g.order() != order_)
    throw std::logic_error("extremal set: member has wrong order");
  if (g.edge_count() != claimed_value_)
    throw std::logic_error("extremal set: member edge count differs from claimed value");
  std::string k = key(g);
  if (!keys_.insert(std::move(k)).second) return false;
  graphs_.push_back(g);
  return true;
}

bool ExtremalSet::contains(const Graph& g) const {
  return keys_.count(key(g)) > 0;
}

bool same_families(const ExtremalSet& a, const ExtremalSet& b) {
  return a.order_ == b.order_ && a.keys_ == b.keys_;
}

Graph g1(int n, int k) {
  if (k < 0 || n < k) throw std::invalid_argument("g1: need n >= k >= 0");
  return join(complete_graph(k), empty_graph(n - k));
}

Graph g1_plus(int n, int k) {
  if (k < 0 || n < k + 2) throw std::invalid_argument("g1_plus: need n >= k + 2");
  return join(complete_graph(k),
              disjoint_union(complete_graph(2), empty_graph(n - k - 2)));
}

Graph g2(int n, int k, int l) {
  if (k < 0 || n < k || l < 2) throw std::invalid_argument("g2: need n >= k >= 0 and l >= 2");
  int d = (n - k) / (l - 1);
  int r = (n - k) % (l - 1);
  Graph rest = empty_graph(0);
  for (int i = 0; i < d; ++i) rest = disjoint_union(rest, complete_graph(l - 1));
  rest = disjoint_union(rest, complete_graph(r));
  return join(complete_graph(k), rest);
}

Graph matching_graph(int k) {
  if (k < 0) throw std::invalid_argument("matching_graph: negative order");
  Graph g = empty_graph(k);
  for (int i = 0; i + 1 < k; i += 2) g.add_edge(i, i + 1);
  return g;
}

Graph g_s(int n, int q, int l1, int r, int s) {
  if (l1 < 2 || l1 % 2 != 0) throw std::invalid_argument("g_s: l1 must be even and >= 2");
  if (q < 0 || r < 0 || r >= l1 - 1) throw std::invalid_argument("g_s: r out of range");
  if ((n - q - r) % (l1 - 1) != 0)
    throw std::invalid_argument("g_s: n, q, r inconsistent with block size");
  int d = (n - q - r) / (l1 - 1);
  if (s < 0 || s > d - 1) throw std::invalid_argument("g_s: s out of range");
  Graph rest = empty_graph(0);
  for (int i = 0; i < d - s - 1; ++i) rest = disjoint_union(rest, complete_graph(l1 - 1));
  rest = disjoint_union(
      rest, join(complete_graph((l1 - 2) / 2), empty_graph(l1 / 2 + s * (l1 - 1) + r)));
  return join(complete_graph(q), rest);
}

ExtremalSet path_extremal_family(int n, int l) {
  if (l < 2) throw std::invalid_argument("path_extremal_family: need l >= 2");
  if (n < l) throw std::invalid_argument("path_extremal_family: need n >= l");
  ExtremalSet out(n, bracket(n, l, l), "path-family");
  int d = n / (l - 1);
  int r = n % (l - 1);
  Graph base = empty_graph(0);
  for (int i = 0; i < d; ++i) base = disjoint_union(base, complete_graph(l - 1));
  base = disjoint_union(base, complete_graph(r));
  out.add(base);
  if (l % 2 == 0 && (r == l / 2 || r == (l - 2) / 2))
    for (int s = 0; s < d; ++s) out.add(g_s(n, 0, l, r, s));
  return out;
}

ExtremalSet star_forest_extremal(int n, const std::vector<int>& stars) {
  StarForestMax sf = ex_star_forest(n, stars);
  int i = sf.index;
  int a = stars[i - 1];
  if (n < i + a)
    throw std::invalid_argument("star_forest_extremal: need n >= i* + a_{i*}");
  ExtremalSet out(n, sf.result.value, "star-forest-representative");
  out.add(join(complete_graph(i - 1), near_regular(n - i + 1, a - 1)));
  return out;
}

ExtremalSet extremal_set_main(const PathStarForest& f, int n) {
  if (n < 0 || n > Graph::kMaxVertices)
    throw std::invalid_argument("extremal_set_main: order out of range for concrete graphs");
  Regime reg = classify_regime(f);
  if (reg == Regime::kUncovered)
    throw std::domain_error(
        "extremal_set_main: no proven family for p = 1 with a_q < l_1 - 1 on "
        "the hub side of the dichotomy");
  if (n < f.total_vertices()) {
    Graph kn = complete_graph(n);
    ExtremalSet out(n, kn.edge_count(), "complete-graph");
    out.add(kn);
    return out;
  }
  long long want = ex_main(f, n).value;
  int p = f.path_count(), q = f.star_count();

  auto finish = [&](ExtremalSet out) {
    for (const Graph& g : out.graphs())
      if (contains_forest(g, f))
        throw std::logic_error("extremal_set_main: emitted graph is not F-free");
    return out;
  };

  if (reg == Regime::kB) return finish(star_forest_extremal(n, f.stars));

  if (p == 1 && q == 0) return finish(path_extremal_family(n, f.paths[0]));

  if (p == 1) {
    int l1 = f.paths[0];
    int r = (n - q) % (l1 - 1);
    int d = (n - q) / (l1 - 1);
    ExtremalSet out(n, want, "hub-path-family");
    out.add(g2(n, q, l1));
    if (l1 % 2 == 0 && (r == l1 / 2 || r == (l1 - 2) / 2)) {
      out.add(g_s(n, q, l1, r, d - 1));
      if (f.stars.back() == 4 && l1 == 4 && r == 1) out.add(g_s(n, q, l1, r, 0));
    }
    return finish(out);
  }

  ForestParams dp = derived_params(f);
  bool all3 = true, allodd = true;
  for (int l : f.paths) {
    if (l != 3) all3 = false;
    if (l % 2 == 0) allodd = false;
  }
  Graph g = all3 ? join(complete_graph(p + q - 1), matching_graph(n - p - q + 1))
            : allodd ? g1_plus(n, q + dp.delta - 1)
                     : g1(n, q + dp.delta - 1);
  if (g.edge_count() != want)
    throw std::domain_error(
        "extremal_set_main: closed-form value departs from the hub "
        "construction at this order; the exact family starts at larger n");
  ExtremalSet out(n, want,
                  all3 ? "hub-matching" : allodd ? "hub-clique-pair" : "hub-independent");
  out.add(g);
  return finish(out);
}

}  // namespace psf
