#pragma once

#include "psf/constructions.hpp"
#include "psf/forest.hpp"

namespace psf {

struct OracleOptions {
  int jobs = 1;
  int limit = 8;                 // refuse larger n; hard ceiling 9
  bool disable_pruning = false;  // leaf-checked exhaustive mode (n <= 6 only)
  int split_depth = 8;           // edge slots fixed per parallel seed
};

struct OracleResult {
  int n;
  PathStarForest forest;
  long long max_edges;
  ExtremalSet extremal;  // complete up to isomorphism
  unsigned long long nodes_explored;
};

// Exact ex(n, f) and the full extremal set by branch-and-bound over the
// C(n,2) edge slots. Deterministic; internally parallel when jobs > 1
// (max and extremal set unaffected, node count may vary).
OracleResult exact_ex(int n, const PathStarForest& f, const OracleOptions& opt = {});

// Convenience wrapper returning just the extremal set.
ExtremalSet extremal_collection(int n, const PathStarForest& f,
                                const OracleOptions& opt = {});

}  // namespace psf
