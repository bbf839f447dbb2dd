#include "doctest.h"
#include "psf/forest.hpp"

using namespace psf;
using psf::Rat;

TEST_CASE("parsing accepts the token grammar and sorts descending") {
  PathStarForest f = parse_forest("P4,S3");
  CHECK(f.paths == std::vector<int>{4});
  CHECK(f.stars == std::vector<int>{3});
  CHECK(f.str() == "P4,S3");

  PathStarForest g = parse_forest(" S3 , P2 ,P5, S4 ");
  CHECK(g.paths == std::vector<int>{5, 2});
  CHECK(g.stars == std::vector<int>{4, 3});
  CHECK(g.str() == "P5,P2,S4,S3");
  CHECK(parse_forest(g.str()) == g);

  CHECK(parse_forest("P10").paths == std::vector<int>{10});
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_forest(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("P1"), std::invalid_argument);   // paths need >= 2
  CHECK_THROWS_AS(parse_forest("S2"), std::invalid_argument);   // stars need >= 3
  CHECK_THROWS_AS(parse_forest("P0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("Q4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("P"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("P4,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("P4 S3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("P1001"), std::invalid_argument);  // size cap
}

TEST_CASE("make_forest validates and sorts") {
  PathStarForest f = make_forest({2, 4}, {3, 5});
  CHECK(f.paths == std::vector<int>{4, 2});
  CHECK(f.stars == std::vector<int>{5, 3});
  CHECK(f.total_vertices() == 16);  // 4+2 path vertices, (5+1)+(3+1) star vertices
  CHECK_THROWS_AS(make_forest({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_forest({1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_forest({}, {2}), std::invalid_argument);
}

TEST_CASE("derived parameters") {
  SUBCASE("single even path with one star") {
    ForestParams d = derived_params(parse_forest("P4,S3"));
    CHECK(d.delta == 2);
    CHECK(d.mu == Rat(1));
    CHECK(d.beta == Rat(2));
    CHECK(d.path_vertices == 4);
    CHECK(d.prefix == std::vector<int>{4});
    REQUIRE(d.star_threshold.has_value());
    CHECK(*d.star_threshold == Rat(1));
  }
  SUBCASE("all paths on three vertices halve mu") {
    ForestParams d = derived_params(parse_forest("P3,P3,S4"));
    CHECK(d.delta == 2);
    CHECK(d.mu == Rat(1, 2));
    CHECK(d.beta == Rat(5, 2));
    CHECK(*d.star_threshold == Rat(3, 2));
  }
  SUBCASE("single odd path also halves mu") {
    ForestParams d = derived_params(parse_forest("P3,S5"));
    CHECK(d.mu == Rat(1, 2));
    CHECK(d.beta == Rat(3, 2));
    CHECK(*d.star_threshold == Rat(2));
  }
  SUBCASE("no paths: mu defaults to one half") {
    ForestParams d = derived_params(parse_forest("S3,S3"));
    CHECK(d.delta == 0);
    CHECK(d.mu == Rat(1, 2));
    CHECK(d.beta == Rat(3, 2));
    CHECK(*d.star_threshold == Rat(2));
  }
  SUBCASE("two paths with one not equal to three keep mu at one") {
    ForestParams d = derived_params(parse_forest("P5,P3"));
    CHECK(d.delta == 3);
    CHECK(d.mu == Rat(1));
    CHECK(d.beta == Rat(2));
    CHECK(d.prefix == std::vector<int>{5, 8});
    CHECK_FALSE(d.star_threshold.has_value());
  }
}
