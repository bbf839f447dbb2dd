#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "psf/graph.hpp"

namespace psf {

// Canonical form of a graph: the lexicographically smallest upper-triangle
// bit string (same column order as graph6) over all vertex orderings that
// respect the stable neighbor-degree refinement. Two graphs are isomorphic
// exactly when their canonical forms compare equal.
struct CanonicalForm {
  int n = 0;
  // Bit k of the triangle lives in word k/64 at position 63 - k%64, so
  // lexicographic bit-string order coincides with array comparison.
  std::array<std::uint64_t, 2> bits{};

  auto operator<=>(const CanonicalForm&) const = default;
};

// Cost guard: the search enumerates orderings within refinement cells, which
// is exact at any order but grows factorially. Callers may raise the limit to
// at most 16 (the bit capacity) when they accept the cost.
inline constexpr int kDefaultCanonLimit = 10;

CanonicalForm canonical_form(const Graph& g, int limit = kDefaultCanonLimit);

}  // namespace psf
