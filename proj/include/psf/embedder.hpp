#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "psf/forest.hpp"
#include "psf/graph.hpp"

namespace psf {

// Witness of a forest sitting inside a host graph. Entries are aligned with
// the forest's component lists: paths[i] is the ordered vertex sequence of
// the i-th path, stars[j] the center and leaf set of the j-th star.
struct Embedding {
  struct Star {
    int center = -1;
    std::vector<int> leaves;
  };
  std::vector<std::vector<int>> paths;
  std::vector<Star> stars;
};

// Thrown when the backtracking search exceeds its node budget; callers get a
// hard error instead of a silently wrong verdict.
struct EmbedBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultEmbedBudget = 20'000'000;

// Decides subgraph containment of a path-star forest. Returns a valid
// embedding iff one exists; deterministic for fixed inputs.
std::optional<Embedding> contains_forest(const Graph& g, const PathStarForest& f,
                                         long long budget = kDefaultEmbedBudget);

// Independent slow check: plain exhaustive assignment with no pruning beyond
// vertex distinctness and adjacency. Limited to hosts with <= 12 vertices
// and |f| <= |g|; throws std::invalid_argument outside that domain.
bool reference_contains(const Graph& g, const PathStarForest& f);

// True iff e is a correct witness for f inside g (distinct vertices, path
// adjacencies, star center-leaf adjacencies, right shapes).
bool embedding_valid(const Graph& g, const PathStarForest& f, const Embedding& e);

}  // namespace psf
