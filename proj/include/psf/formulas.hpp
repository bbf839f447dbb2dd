#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psf/forest.hpp"
#include "psf/rational.hpp"

namespace psf {

// Which branch of the dispatch produced a value.
//   kA        hub-over-linear-forest regime (also pure linear forests)
//   kB        star-forest-dominated regime
//   kUncovered  single odd-feeling gap: p = 1 with a_q < l_1 - 1 and the
//               hub regime inequality satisfied; no proven formula
//   kExact    trivial range (forest does not fit), value C(n,2)
enum class Regime { kA, kB, kUncovered, kExact };

const char* regime_name(Regime r);

struct ExResult {
  long long value = 0;
  Regime regime = Regime::kExact;
  std::string theorem;           // short tag for the closed form used
  std::optional<Rat> threshold;  // least n the formula is proven at; empty =
                                 // unquantified ("sufficiently large n" only)
  bool guaranteed = false;       // threshold known and n >= ceil(threshold)
  std::optional<Rat> gamma;      // linear-form constant (regime A, q >= 1)
};

// e(K_{m-1} u d K_{l-1} u K_r) where n = (m-1) + d(l-1) + r, 0 <= r < l-1.
// Requires n >= m >= l >= 2.
long long bracket(long long n, int m, int l);

// Extremal number for a single path P_l; exact at every n.
ExResult ex_path(long long n, int l);

// Dispatch over linear-forest closed forms (paths only, descending).
ExResult ex_linear_forest(long long n, const std::vector<int>& paths);

struct StarForestMax {
  ExResult result;
  int index = 1;  // maximizing hub size index i*, ties broken toward small i
};

// Star forests: max_j [ (j-1)(n - j/2) + floor((a_j-1)/2 * (n-j+1)) ].
// Requires q >= 1 and n >= q + a_q + 1 (smaller n is oracle territory).
StarForestMax ex_star_forest(long long n, const std::vector<int>& stars);

// Constant gamma with ex = beta*n - gamma on the hub regime; requires the
// forest to classify as regime A with q >= 1.
Rat gamma_constant(const PathStarForest& f, long long n);

Regime classify_regime(const PathStarForest& f);

// Top-level dispatch across regimes. Throws on the uncovered regime and on
// n too small for the regime-B formula preconditions.
ExResult ex_main(const PathStarForest& f, long long n);

struct Thresholds {
  std::optional<Rat> n1;     // regime-A validity bound (absent when p = 0)
  std::optional<Rat> n2;     // regime-B validity bound
  std::optional<Rat> big_l;  // linear-forest ingredient L (p >= 2 only)
};

// Quantified validity bounds; requires q >= 1, all stars the same size, and
// either every l_i != 3 or p >= 2 with every l_i = 3.
Thresholds thresholds(const PathStarForest& f);

}  // namespace psf
