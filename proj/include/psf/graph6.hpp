#pragma once

#include <string>
#include <string_view>

#include "psf/graph.hpp"

namespace psf {

// graph6 codec (the standard ASCII interchange format for small graphs):
// header encodes the order (single byte n+63 for n <= 62, '~' plus three
// 6-bit bytes above that), followed by the upper triangle in column order
// x01 x02 x12 x03 ..., packed 6 bits per byte, zero-padded, each byte offset
// by 63. Decoding is strict: exact length, bytes in [63, 126], zero padding.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace psf
