#include "psf/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace psf {

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

void check_paths(const std::vector<int>& paths) {
  if (paths.empty())
    throw std::invalid_argument("linear forest: at least one path required");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i] < 2)
      throw std::invalid_argument("linear forest: path needs >= 2 vertices");
    if (i > 0 && paths[i] > paths[i - 1])
      throw std::invalid_argument("linear forest: paths must be descending");
  }
}

bool all_equal_to(const std::vector<int>& v, int x) {
  return std::all_of(v.begin(), v.end(), [&](int y) { return y == x; });
}

bool any_not_three(const std::vector<int>& v) {
  return std::any_of(v.begin(), v.end(), [](int y) { return y != 3; });
}

bool all_odd(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int y) { return y % 2 == 1; });
}

int count_odd(const std::vector<int>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(),
                                        [](int y) { return y % 2 == 1; }));
}

ExResult trivial_small_n(long long n) {
  ExResult out;
  out.value = choose2(n);
  out.regime = Regime::kExact;
  out.theorem = "complete-graph";
  out.threshold = Rat(0);
  out.guaranteed = true;
  return out;
}

void finish_guarantee(ExResult& r, long long n) {
  r.guaranteed = r.threshold.has_value() && n >= r.threshold->ceil();
}

// Shared precondition of the quantified thresholds: q >= 1, one star size,
// and the path multiset either avoids 3 entirely or is all 3s with p >= 2.
bool thresholds_applicable(const PathStarForest& f) {
  if (f.star_count() == 0) return false;
  if (!all_equal_to(f.stars, f.stars[0])) return false;
  int p = f.path_count();
  bool has_three =
      std::any_of(f.paths.begin(), f.paths.end(), [](int l) { return l == 3; });
  if (p == 1 && has_three) return false;
  if (p >= 2 && has_three && any_not_three(f.paths)) return false;
  return true;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kA:
      return "A";
    case Regime::kB:
      return "B";
    case Regime::kUncovered:
      return "Uncovered";
    case Regime::kExact:
      return "Exact";
  }
  return "?";
}

long long bracket(long long n, int m, int l) {
  if (l < 2 || m < l || n < m)
    throw std::invalid_argument("bracket: need n >= m >= l >= 2");
  long long rest = n - (m - 1);
  long long d = rest / (l - 1);
  long long r = rest % (l - 1);
  return choose2(m - 1) + d * choose2(l - 1) + choose2(r);
}

ExResult ex_path(long long n, int l) {
  if (l < 2) throw std::invalid_argument("ex_path: path needs >= 2 vertices");
  if (n < 0) throw std::invalid_argument("ex_path: negative order");
  if (n < l) return trivial_small_n(n);
  ExResult out;
  out.value = bracket(n, l, l);
  out.regime = Regime::kA;
  out.theorem = "path-closed-form";
  out.threshold = Rat(0);  // exact at every order
  out.guaranteed = true;
  return out;
}

ExResult ex_linear_forest(long long n, const std::vector<int>& paths) {
  check_paths(paths);
  if (n < 0) throw std::invalid_argument("ex_linear_forest: negative order");
  int p = static_cast<int>(paths.size());
  long long s = 0;
  int delta = 0;
  for (int l : paths) {
    s += l;
    delta += l / 2;
  }
  if (n < s) return trivial_small_n(n);
  if (p == 1) return ex_path(n, paths[0]);

  ExResult out;
  out.regime = Regime::kA;
  if (!any_not_three(paths)) {
    out.value = (p - 1) * (2 * n - p) / 2 + (n - p + 1) / 2;
    out.theorem = "p3-forest";
    out.threshold = Rat(5 * p);  // proven for n > 5p - 1
    finish_guarantee(out, n);
    return out;
  }
  long long linear = (delta - 1) * (2 * n - delta) / 2;
  if (count_odd(paths) <= 1) {
    long long best = linear;
    long long sj = 0;
    for (int j = 0; j < p; ++j) {
      sj += paths[j];
      best = std::max(best, bracket(n, static_cast<int>(sj), paths[j]));
    }
    out.value = best;
    out.theorem = "linear-forest-max";
    out.threshold = Rat(s);
    finish_guarantee(out, n);
    return out;
  }
  out.value = linear + (all_odd(paths) ? 1 : 0);
  out.theorem = "linear-forest-linear";
  if (!std::any_of(paths.begin(), paths.end(), [](int l) { return l == 3; }))
    out.threshold = Rat(5 * (s - 1) * (s - 2) * (s - 2), 4 * (delta - 1)) +
                    Rat(delta - 1);
  finish_guarantee(out, n);
  return out;
}

StarForestMax ex_star_forest(long long n, const std::vector<int>& stars) {
  if (stars.empty())
    throw std::invalid_argument("star forest: at least one star required");
  for (std::size_t j = 0; j < stars.size(); ++j) {
    if (stars[j] < 3)
      throw std::invalid_argument("star forest: star needs >= 3 leaves");
    if (j > 0 && stars[j] > stars[j - 1])
      throw std::invalid_argument("star forest: stars must be descending");
  }
  int q = static_cast<int>(stars.size());
  if (n < q + stars.back() + 1)
    throw std::invalid_argument(
        "star forest: closed form needs n >= q + a_q + 1");
  StarForestMax out;
  long long best = -1;
  for (int j = 1; j <= q; ++j) {
    long long term = (j - 1) * (2 * n - j) / 2 +
                     static_cast<long long>(stars[j - 1] - 1) * (n - j + 1) / 2;
    if (term > best) {
      best = term;
      out.index = j;
    }
  }
  out.result.value = best;
  out.result.regime = Regime::kB;
  out.result.theorem = "star-forest-max";
  if (all_equal_to(stars, stars[0])) {
    long long a = stars[0];
    out.result.threshold = Rat(q * (a * a + a + 1)) - Rat(a * (a - 3), 2);
  }
  finish_guarantee(out.result, n);
  return out;
}

Regime classify_regime(const PathStarForest& f) {
  int p = f.path_count(), q = f.star_count();
  if (q == 0) return Regime::kA;
  ForestParams d = derived_params(f);
  if (!(d.beta > *d.star_threshold)) return Regime::kB;
  if (p == 0) return Regime::kB;  // unreachable: beta = q - 1/2 < threshold
  if (p == 1 && f.stars.back() < f.paths[0] - 1) return Regime::kUncovered;
  return Regime::kA;
}

Rat gamma_constant(const PathStarForest& f, long long n) {
  int p = f.path_count(), q = f.star_count();
  if (q < 1 || classify_regime(f) != Regime::kA)
    throw std::domain_error("gamma_constant: needs regime A with q >= 1");
  if (p == 1) {
    long long l1 = f.paths[0];
    long long r = (n - q) % (l1 - 1);
    return Rat(q * q + (l1 - 1) * (q + r) - r * r, 2);
  }
  ForestParams d = derived_params(f);
  if (!any_not_three(f.paths)) {
    Rat g = Rat((p + q) * (p + q) - 1, 2);
    if ((n - p - q + 1) % 2 != 0) g = g + Rat(1, 2);
    return g;
  }
  Rat g = Rat(static_cast<long long>(q + d.delta) * (q + d.delta - 1), 2);
  if (all_odd(f.paths)) g = g - Rat(1);
  return g;
}

ExResult ex_main(const PathStarForest& f, long long n) {
  if (n < 0) throw std::invalid_argument("ex_main: negative order");
  int p = f.path_count(), q = f.star_count();
  if (p + q == 0) throw std::invalid_argument("ex_main: empty forest");
  if (n < f.total_vertices()) return trivial_small_n(n);
  Regime reg = classify_regime(f);
  if (reg == Regime::kUncovered)
    throw std::domain_error(
        "ex_main: no proven formula for p = 1 with a_q < l_1 - 1 on the hub "
        "side of the dichotomy");
  ExResult out;
  if (reg == Regime::kA) {
    ExResult lf = ex_linear_forest(n - q, f.paths);
    out.value = choose2(q) + q * (n - q) + lf.value;
    out.regime = Regime::kA;
    if (q == 0) {
      out.theorem = lf.theorem;
      out.threshold = lf.threshold;
    } else {
      out.theorem = "main-hub-linear";
      out.gamma = gamma_constant(f, n);
      if (thresholds_applicable(f)) out.threshold = thresholds(f).n1;
    }
    finish_guarantee(out, n);
    return out;
  }
  if (n < q + f.stars.back() + 1)
    throw std::invalid_argument(
        "ex_main: n below the star-forest closed form's range (exact search "
        "territory)");
  StarForestMax sf = ex_star_forest(n, f.stars);
  out.value = sf.result.value;
  out.regime = Regime::kB;
  out.theorem = "main-star-forest";
  if (p == 0)
    out.threshold = sf.result.threshold;
  else if (thresholds_applicable(f))
    out.threshold = thresholds(f).n2;
  finish_guarantee(out, n);
  return out;
}

Thresholds thresholds(const PathStarForest& f) {
  int p = f.path_count(), q = f.star_count();
  if (q < 1) throw std::invalid_argument("thresholds: forest has no stars");
  if (!all_equal_to(f.stars, f.stars[0]))
    throw std::invalid_argument("thresholds: star sizes must all be equal");
  bool has_three =
      std::any_of(f.paths.begin(), f.paths.end(), [](int l) { return l == 3; });
  if (p == 1 && has_three)
    throw std::invalid_argument(
        "thresholds: a single P3 is outside the quantified bounds");
  if (p >= 2 && has_three && any_not_three(f.paths))
    throw std::invalid_argument(
        "thresholds: paths must avoid P3 or be all P3 (p >= 2)");

  ForestParams d = derived_params(f);
  long long a = f.stars[0];
  long long s = d.path_vertices;
  Rat base = Rat(q * (a * a + a + 1));
  Thresholds out;
  if (p == 0) {
    // Pure star forest: the closed form's own (sharper) exactness bound.
    out.n2 = base - Rat(a * (a - 3), 2);
    return out;
  }
  long long l1 = f.paths[0];
  if (p == 1) {
    out.n1 = base + Rat(l1, 2) * Rat(a) + Rat(a + l1);
    out.n2 = base + Rat((a + 1) * s);
    return out;
  }
  if (!any_not_three(f.paths)) {
    out.n1 = base + Rat((2 * a + 3) * p) + Rat(a + 1, 2);
    out.n2 = base + Rat((a + 1) * s);
    return out;
  }
  bool even = std::all_of(f.paths.begin(), f.paths.end(),
                          [](int l) { return l % 2 == 0; });
  if (even)
    out.big_l =
        Rat(d.delta, 2) * (Rat(1) + Rat(l1 - 2, 2 * d.delta - l1)) + Rat(1);
  else
    out.big_l = Rat(5 * (s - 1) * (s - 2) * (s - 2), 4 * (d.delta - 1)) +
                Rat(d.delta - 1);
  out.n1 = base + max(Rat(a * (s - d.delta + 1) + s), *out.big_l);
  out.n2 = base + max(Rat((a + 1) * s), *out.big_l);
  return out;
}

}  // namespace psf
