#include "doctest.h"
#include "psf/constructions.hpp"
#include "psf/embedder.hpp"

using namespace psf;

TEST_CASE("containment basics") {
  CHECK(contains_forest(complete_graph(4), parse_forest("P4")).has_value());
  CHECK_FALSE(contains_forest(cycle_graph(7), parse_forest("S3")).has_value());
  CHECK(contains_forest(cycle_graph(7), parse_forest("P7")).has_value());
  CHECK_FALSE(contains_forest(disjoint_union(complete_graph(3), complete_graph(3)),
                              parse_forest("P4"))
                  .has_value());
  CHECK(contains_forest(disjoint_union(complete_graph(3), complete_graph(2)),
                        parse_forest("P3,P2"))
            .has_value());
  // not enough host vertices
  CHECK_FALSE(contains_forest(complete_graph(3), parse_forest("P4")).has_value());
}

TEST_CASE("stars need centers of sufficient free degree") {
  Graph s5 = star_graph(5);
  CHECK(contains_forest(s5, parse_forest("S3")).has_value());
  CHECK(contains_forest(s5, parse_forest("S5")).has_value());
  CHECK_FALSE(contains_forest(s5, parse_forest("S6")).has_value());
  CHECK_FALSE(contains_forest(s5, parse_forest("P4")).has_value());
  CHECK(contains_forest(s5, parse_forest("P3")).has_value());
  // leaves of one star cannot double as another's center
  CHECK_FALSE(contains_forest(star_graph(8), parse_forest("S3,S3")).has_value());
  CHECK(contains_forest(disjoint_union(star_graph(3), star_graph(3)),
                        parse_forest("S3,S3"))
            .has_value());
}

TEST_CASE("witnesses validate") {
  PathStarForest f = parse_forest("P4,S3");
  Graph host = join(complete_graph(2),
                    disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)),
                                   complete_graph(3)));
  auto e = contains_forest(host, f);
  REQUIRE(e.has_value());
  CHECK(embedding_valid(host, f, *e));
  REQUIRE(e->paths.size() == 1);
  REQUIRE(e->stars.size() == 1);
  CHECK(e->paths[0].size() == 4);
  CHECK(e->stars[0].leaves.size() == 3);

  // tampering breaks validity
  Embedding bad = *e;
  bad.stars[0].leaves[0] = bad.paths[0][0];
  CHECK_FALSE(embedding_valid(host, f, bad));
}

TEST_CASE("extremal constructions stay free just below the forest") {
  CHECK_FALSE(contains_forest(g2(26, 1, 4), parse_forest("P4,S3")).has_value());
  Graph g2plus = g2(26, 1, 4);
  g2plus.add_edge(1, 4);  // connect two blocks
  CHECK(contains_forest(g2plus, parse_forest("P4,S3")).has_value());
  CHECK_FALSE(
      contains_forest(join(complete_graph(2), matching_graph(18)),
                      parse_forest("P3,P3,S4"))
          .has_value());
  CHECK_FALSE(contains_forest(g1_plus(12, 3), parse_forest("P5,P5")).has_value());
}

TEST_CASE("the budget guard throws instead of guessing") {
  CHECK_THROWS_AS(contains_forest(complete_graph(8), parse_forest("P4"), 1),
                  EmbedBudgetExceeded);
}

TEST_CASE("reference search agrees and enforces its domain") {
  CHECK(reference_contains(complete_graph(4), parse_forest("P4")));
  CHECK_FALSE(reference_contains(cycle_graph(7), parse_forest("S3")));
  CHECK_FALSE(reference_contains(star_graph(8), parse_forest("S3,S3")));
  CHECK_FALSE(reference_contains(star_graph(8), parse_forest("S3,P2")));
  CHECK(reference_contains(disjoint_union(star_graph(3), complete_graph(2)),
                           parse_forest("S3,P2")));
  CHECK_THROWS_AS(reference_contains(empty_graph(13), parse_forest("P2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(reference_contains(complete_graph(3), parse_forest("P4")),
                  std::invalid_argument);
}
