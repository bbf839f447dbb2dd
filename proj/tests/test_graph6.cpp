#include <string>

#include "doctest.h"
#include "psf/graph.hpp"
#include "psf/graph6.hpp"

using namespace psf;

TEST_CASE("known encodings are reproduced byte for byte") {
  CHECK(graph6_encode(empty_graph(0)) == "?");
  CHECK(graph6_encode(empty_graph(1)) == "@");
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_encode(complete_graph(3)) == "Bw");
  CHECK(graph6_encode(cycle_graph(5)) == "Dhc");
  CHECK(graph6_decode("?") == empty_graph(0));
  CHECK(graph6_decode("@") == empty_graph(1));
  CHECK(graph6_decode("A_") == complete_graph(2));
  CHECK(graph6_decode("Bw") == complete_graph(3));
  CHECK(graph6_decode("Dhc") == cycle_graph(5));
}

TEST_CASE("round trips cover the full supported order range") {
  for (int n : {1, 2, 5, 13, 30, 62, 63, 64}) {
    for (const Graph& g : {empty_graph(n), complete_graph(n), path_graph(n),
                           near_regular(n, 3)}) {
      CAPTURE(n);
      CHECK(graph6_decode(graph6_encode(g)) == g);
    }
  }
}

TEST_CASE("orders above 62 use the long header") {
  std::string s = graph6_encode(empty_graph(63));
  REQUIRE(s.size() >= 4);
  CHECK(s[0] == '~');
  CHECK(graph6_decode(s).order() == 63);
  CHECK(graph6_encode(empty_graph(62))[0] != '~');
}

TEST_CASE("malformed strings are rejected") {
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);     // truncated body
  CHECK_THROWS_AS(graph6_decode("Bw "), std::invalid_argument);   // trailing byte
  CHECK_THROWS_AS(graph6_decode("A!"), std::invalid_argument);    // byte below '?'
  CHECK_THROWS_AS(graph6_decode("Aa"), std::invalid_argument);    // padding bit set
  CHECK_THROWS_AS(graph6_decode("~~????"), std::invalid_argument);  // >64 vertices
  CHECK_THROWS_AS(graph6_decode(std::string() + '\x7f' + "w"), std::invalid_argument);
}
