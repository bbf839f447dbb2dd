#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace psf {

// Undirected simple graph on at most 64 labeled vertices, stored as one
// 64-bit adjacency mask per vertex. Everything in this project (constructions,
// embedding, brute-force search) runs on top of these masks.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: order must be in [0, 64]");
  }

  int order() const { return n_; }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: no loops");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
  }

  // Mask with one bit per vertex.
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // one center plus `leaves` pendant vertices

// Vertices of `b` are relabeled to follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

// Disjoint union plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);

// Deterministic maximum-size graph with maximum degree min(d, n-1):
// floor(min(d, n-1) * n / 2) edges; if that degree sum is odd, exactly vertex
// n-1 ends up one below the target degree.
Graph near_regular(int n, int d);

}  // namespace psf
