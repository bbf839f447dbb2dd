#pragma once

#include <string>
#include <set>
#include <vector>

#include "psf/forest.hpp"
#include "psf/graph.hpp"

namespace psf {

// A deduplicated set of graphs that all share one claimed edge count.
// Dedup is isomorphism-exact while the order is within the canonical-form
// limit; beyond that it falls back to labeled (graph6) equality, which is
// enough for the deterministically laid-out constructions stored there.
class ExtremalSet {
 public:
  ExtremalSet(int order, long long claimed_value, std::string family_tag);

  // Inserts g unless an equivalent member is already present. Throws
  // std::logic_error if g has the wrong order or edge count.
  bool add(const Graph& g);
  bool contains(const Graph& g) const;

  const std::vector<Graph>& graphs() const { return graphs_; }
  std::size_t size() const { return graphs_.size(); }
  int order() const { return order_; }
  long long claimed_value() const { return claimed_value_; }
  const std::string& family_tag() const { return family_tag_; }

 private:
  friend bool same_families(const ExtremalSet&, const ExtremalSet&);
  std::string key(const Graph& g) const;

  int order_;
  long long claimed_value_;
  std::string family_tag_;
  std::vector<Graph> graphs_;
  std::set<std::string> keys_;
};

// Set equality of members (by the dedup key), ignoring family tags.
bool same_families(const ExtremalSet& a, const ExtremalSet& b);

// Named building blocks. Vertex layout is deterministic: hub block first,
// then the joined blocks in declaration order.
Graph g1(int n, int k);                         // K_k v empty
Graph g1_plus(int n, int k);                    // K_k v (K_2 u empty)
Graph g2(int n, int k, int l);                  // K_k v (d K_{l-1} u K_r)
Graph matching_graph(int k);                    // floor(k/2) disjoint edges
Graph g_s(int n, int q, int l1, int r, int s);  // hub over a padded clique-blowup

// All maximum path-free graphs on n vertices (n >= l >= 2).
ExtremalSet path_extremal_family(int n, int l);

// One representative maximum star-forest-free graph.
ExtremalSet star_forest_extremal(int n, const std::vector<int>& stars);

// The extremal family for a full path-star forest. Every member is
// verified F-free and verified to match ex_main(f, n) before returning.
ExtremalSet extremal_set_main(const PathStarForest& f, int n);

}  // namespace psf
