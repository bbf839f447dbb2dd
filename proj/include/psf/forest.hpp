#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psf/rational.hpp"

namespace psf {

// A disjoint union of paths P_l (l >= 2 vertices) and stars S_a (a >= 3
// leaves, a+1 vertices), the forbidden-subgraph family this project computes
// extremal numbers for. Both lists are kept sorted descending.
struct PathStarForest {
  std::vector<int> paths;  // vertex counts l_1 >= l_2 >= ... >= 2
  std::vector<int> stars;  // leaf counts a_1 >= a_2 >= ... >= 3

  int path_count() const { return static_cast<int>(paths.size()); }
  int star_count() const { return static_cast<int>(stars.size()); }
  int total_vertices() const;
  std::string str() const;  // "P4,S3" grammar, round-trips through parse

  bool operator==(const PathStarForest&) const = default;
};

// Validates component sizes, sorts descending, and requires at least one
// component.
PathStarForest make_forest(std::vector<int> paths, std::vector<int> stars);

// Grammar: comma-separated tokens P<k> (k >= 2) and S<k> (k >= 3), any order,
// optional surrounding whitespace per token.
PathStarForest parse_forest(std::string_view text);

// Parameters the closed forms are phrased in.
struct ForestParams {
  int delta = 0;               // sum of floor(l_i / 2)
  Rat mu;                      // 1 or 1/2, see derived_params
  Rat beta;                    // q + delta - mu
  int path_vertices = 0;       // s = sum of l_i
  std::vector<int> prefix;     // s_j = l_1 + ... + l_j
  std::optional<Rat> star_threshold;  // max_j { j-1 + (a_j-1)/2 }, q >= 1 only
};

ForestParams derived_params(const PathStarForest& f);

}  // namespace psf
