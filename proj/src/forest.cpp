#include "psf/forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace psf {

int PathStarForest::total_vertices() const {
  int total = 0;
  for (int l : paths) total += l;
  for (int a : stars) total += a + 1;
  return total;
}

std::string PathStarForest::str() const {
  std::string out;
  for (int l : paths) {
    if (!out.empty()) out += ',';
    out += 'P' + std::to_string(l);
  }
  for (int a : stars) {
    if (!out.empty()) out += ',';
    out += 'S' + std::to_string(a);
  }
  return out;
}

PathStarForest make_forest(std::vector<int> paths, std::vector<int> stars) {
  for (int l : paths)
    if (l < 2) throw std::invalid_argument("forest: path needs >= 2 vertices");
  for (int a : stars)
    if (a < 3) throw std::invalid_argument("forest: star needs >= 3 leaves");
  if (paths.empty() && stars.empty())
    throw std::invalid_argument("forest: at least one component required");
  std::sort(paths.begin(), paths.end(), std::greater<>());
  std::sort(stars.begin(), stars.end(), std::greater<>());
  return PathStarForest{std::move(paths), std::move(stars)};
}

PathStarForest parse_forest(std::string_view text) {
  std::vector<int> paths, stars;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (token.size() < 2 || (token[0] != 'P' && token[0] != 'S'))
      throw std::invalid_argument("forest: malformed token '" +
                                  std::string(token) + "'");
    int value = 0;
    for (std::size_t k = 1; k < token.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(token[k])))
        throw std::invalid_argument("forest: malformed token '" +
                                    std::string(token) + "'");
      value = value * 10 + (token[k] - '0');
      if (value > 1000)
        throw std::invalid_argument("forest: component size above 1000 in '" +
                                    std::string(token) + "'");
    }
    if (token[0] == 'P')
      paths.push_back(value);
    else
      stars.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make_forest(std::move(paths), std::move(stars));
}

ForestParams derived_params(const PathStarForest& f) {
  ForestParams out;
  for (int l : f.paths) {
    out.delta += l / 2;
    out.path_vertices += l;
    out.prefix.push_back(out.path_vertices);
  }
  int p = f.path_count();
  bool some_not_three =
      std::any_of(f.paths.begin(), f.paths.end(), [](int l) { return l != 3; });
  if ((p == 1 && f.paths[0] % 2 == 0) || (p >= 2 && some_not_three))
    out.mu = Rat(1);
  else
    out.mu = Rat(1, 2);
  out.beta = Rat(f.star_count()) + Rat(out.delta) - out.mu;
  if (f.star_count() > 0) {
    Rat best = Rat(f.stars[0] - 1, 2);  // j = 1 term
    for (int j = 2; j <= f.star_count(); ++j)
      best = max(best, Rat(j - 1) + Rat(f.stars[j - 1] - 1, 2));
    out.star_threshold = best;
  }
  return out;
}

}  // namespace psf
