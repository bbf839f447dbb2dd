#include "psf/graph.hpp"

namespace psf {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star_graph: negative leaves");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.order(), nb = b.order();
  Graph g(na + nb);  // throws if the union exceeds 64 vertices
  for (int u = 0; u < na; ++u)
    for (int v = u + 1; v < na; ++v)
      if (a.has_edge(u, v)) g.add_edge(u, v);
  for (int u = 0; u < nb; ++u)
    for (int v = u + 1; v < nb; ++v)
      if (b.has_edge(u, v)) g.add_edge(na + u, na + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

Graph near_regular(int n, int d) {
  if (n < 0 || n > Graph::kMaxVertices)
    throw std::invalid_argument("near_regular: order must be in [0, 64]");
  if (d < 0) throw std::invalid_argument("near_regular: negative degree");
  int deg = std::min(d, n > 0 ? n - 1 : 0);
  Graph g(n);
  if (n == 0 || deg == 0) return g;
  if (deg % 2 == 0) {
    for (int off = 1; off <= deg / 2; ++off)
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + off) % n);
    return g;
  }
  if (n % 2 == 0) {
    for (int off = 1; off <= (deg - 1) / 2; ++off)
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + off) % n);
    for (int v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);
    return g;
  }
  // deg odd and n odd: a deg-regular graph on n vertices cannot exist. Build
  // the regular graph on n-1 vertices, then trade (deg-1)/2 of its antipodal
  // edges for edges to the new last vertex, which lands at degree deg-1.
  g = near_regular(n - 1, deg);
  Graph out(n);
  for (int u = 0; u < n - 1; ++u)
    for (int v = u + 1; v < n - 1; ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  int half = (n - 1) / 2;
  for (int t = 0; t < (deg - 1) / 2; ++t) {
    out.remove_edge(t, t + half);
    out.add_edge(n - 1, t);
    out.add_edge(n - 1, t + half);
  }
  return out;
}

}  // namespace psf
