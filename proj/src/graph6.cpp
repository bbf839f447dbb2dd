#include "psf/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace psf {

namespace {

constexpr int kBias = 63;

int triangle_bits(int n) { return n * (n - 1) / 2; }

[[noreturn]] void fail(const std::string& why) {
  throw std::invalid_argument("graph6: " + why);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    // Extended header: '~' followed by three 6-bit groups, most significant
    // first. Orders above 64 cannot occur here.
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kBias));
  }
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) fail("empty input");
  std::size_t pos = 0;
  long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      fail("order beyond supported range");
    if (text.size() < 4) fail("truncated extended header");
    n = 0;
    for (int k = 1; k <= 3; ++k) {
      int b = static_cast<unsigned char>(text[k]);
      if (b < kBias || b > 126) fail("header byte out of range");
      n = (n << 6) | (b - kBias);
    }
    pos = 4;
  } else {
    int b = static_cast<unsigned char>(text[0]);
    if (b < kBias || b > 125) fail("header byte out of range");
    n = b - kBias;
    pos = 1;
  }
  if (n > Graph::kMaxVertices) fail("order exceeds 64-vertex capacity");
  int bits = triangle_bits(static_cast<int>(n));
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need) fail("body length mismatch");
  Graph g(static_cast<int>(n));
  int i = 0, j = 1;
  for (std::size_t k = 0; k < need; ++k) {
    int b = static_cast<unsigned char>(text[pos + k]);
    if (b < kBias || b > 126) fail("body byte out of range");
    int group = b - kBias;
    for (int s = 5; s >= 0; --s) {
      int bit = (group >> s) & 1;
      if (j < n) {
        if (bit) g.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (bit) {
        fail("nonzero padding");
      }
    }
  }
  return g;
}

}  // namespace psf
