#include "doctest.h"
#include "psf/formulas.hpp"

using namespace psf;
using psf::Rat;

TEST_CASE("bracket edge counts") {
  CHECK(bracket(4, 4, 4) == 3);
  CHECK(bracket(5, 4, 4) == 4);
  CHECK(bracket(6, 4, 4) == 6);
  CHECK(bracket(13, 7, 4) == 21);
  CHECK(bracket(8, 8, 8) == 21);
  CHECK(bracket(7, 2, 2) == 0);
  CHECK_THROWS_AS(bracket(3, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(bracket(5, 3, 4), std::invalid_argument);
}

TEST_CASE("single path values are exact at every order") {
  CHECK(ex_path(7, 3).value == 3);
  CHECK(ex_path(9, 5).value == 12);
  CHECK(ex_path(5, 4).value == 4);
  ExResult r = ex_path(9, 5);
  CHECK(r.theorem == "path-closed-form");
  CHECK(r.regime == Regime::kA);
  REQUIRE(r.threshold.has_value());
  CHECK(*r.threshold == Rat(0));
  CHECK(r.guaranteed);
  // below the forest order the complete graph is trivially free
  ExResult tiny = ex_path(3, 4);
  CHECK(tiny.value == 3);
  CHECK(tiny.regime == Regime::kExact);
}

TEST_CASE("linear forest dispatch picks the right closed form") {
  SUBCASE("at most one odd path takes the bracket maximum") {
    ExResult r = ex_linear_forest(7, {4, 2});
    CHECK(r.value == 11);
    CHECK(r.theorem == "linear-forest-max");
    CHECK(*r.threshold == Rat(6));
    CHECK(r.guaranteed);
    CHECK(ex_linear_forest(6, {4, 2}).value == 10);
    CHECK(ex_linear_forest(8, {6, 2}).value == 21);
    CHECK(ex_linear_forest(7, {2, 2, 2}).value == 11);
  }
  SUBCASE("all paths on three vertices") {
    ExResult r = ex_linear_forest(10, {3, 3});
    CHECK(r.value == 13);
    CHECK(r.theorem == "p3-forest");
    CHECK(*r.threshold == Rat(10));
    CHECK(r.guaranteed);
  }
  SUBCASE("two or more odd paths take the linear form plus a constant") {
    ExResult r = ex_linear_forest(12, {5, 5});
    CHECK(r.value == 31);  // 3(2n-4)/2 + 1
    CHECK(r.theorem == "linear-forest-linear");
    REQUIRE(r.threshold.has_value());
    CHECK(*r.threshold == Rat(243));
    CHECK_FALSE(r.guaranteed);
    CHECK(ex_linear_forest(243, {5, 5}).guaranteed);
    // mixed parities with at least two odd: constant drops to zero
    CHECK(ex_linear_forest(20, {6, 5, 3}).value == 85);
    // a path on three vertices leaves the bound unquantified
    CHECK_FALSE(ex_linear_forest(20, {7, 5, 3}).threshold.has_value());
    CHECK(ex_linear_forest(20, {7, 5, 3}).value == 86);
  }
  SUBCASE("trivial range") {
    CHECK(ex_linear_forest(5, {4, 2}).value == 10);
    CHECK(ex_linear_forest(5, {4, 2}).regime == Regime::kExact);
  }
}

TEST_CASE("star forest maximum and its index") {
  StarForestMax a = ex_star_forest(10, {3, 3});
  CHECK(a.result.value == 18);
  CHECK(a.index == 2);
  StarForestMax b = ex_star_forest(10, {5, 3});
  CHECK(b.result.value == 20);
  CHECK(b.index == 1);
  CHECK(ex_star_forest(8, {3, 3}).result.value == 14);
  CHECK(ex_star_forest(43, {5}).result.value == 86);
  CHECK(ex_star_forest(43, {5}).result.theorem == "star-forest-max");
  CHECK_THROWS_AS(ex_star_forest(5, {3, 3}), std::invalid_argument);
  // quantified bound only when all stars share one size
  CHECK(ex_star_forest(30, {4, 4}).result.threshold.has_value());
  CHECK_FALSE(ex_star_forest(30, {5, 3}).result.threshold.has_value());
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(parse_forest("P4,S3")) == Regime::kA);
  CHECK(classify_regime(parse_forest("P4")) == Regime::kA);
  CHECK(classify_regime(parse_forest("S3")) == Regime::kB);
  CHECK(classify_regime(parse_forest("P2,S5")) == Regime::kB);
  CHECK(classify_regime(parse_forest("P3,S5")) == Regime::kB);
  CHECK(classify_regime(parse_forest("P2,S3,S3")) == Regime::kB);
  CHECK(classify_regime(parse_forest("P6,S3")) == Regime::kUncovered);
}

TEST_CASE("gamma constants on the hub side") {
  CHECK(gamma_constant(parse_forest("P4,S3"), 26) == Rat(3));
  CHECK(gamma_constant(parse_forest("P3,P3,S4"), 20) == Rat(4));
  CHECK(gamma_constant(parse_forest("P5,P5,S4"), 100) == Rat(9));
}

TEST_CASE("top level dispatch") {
  SUBCASE("hub regime with one path and one star") {
    ExResult r = ex_main(parse_forest("P4,S3"), 26);
    CHECK(r.value == 49);
    CHECK(r.regime == Regime::kA);
    CHECK(r.theorem == "main-hub-linear");
    REQUIRE(r.threshold.has_value());
    CHECK(*r.threshold == Rat(26));
    CHECK(r.guaranteed);
    REQUIRE(r.gamma.has_value());
    CHECK(*r.gamma == Rat(3));
    // the linear form identity at this order
    CHECK(Rat(r.value) == Rat(2) * Rat(26) - Rat(3));
  }
  SUBCASE("hub regime with three-vertex paths") {
    CHECK(ex_main(parse_forest("P3,P3,S4"), 20).value == 46);
  }
  SUBCASE("hub regime, larger star") {
    CHECK(ex_main(parse_forest("P4,S4"), 11).value == 19);
  }
  SUBCASE("star regime") {
    ExResult r = ex_main(parse_forest("P2,S5"), 43);
    CHECK(r.value == 86);
    CHECK(r.regime == Regime::kB);
    CHECK(r.theorem == "main-star-forest");
    REQUIRE(r.threshold.has_value());
    CHECK(*r.threshold == Rat(43));
    CHECK(r.guaranteed);
  }
  SUBCASE("trivial range is the complete graph") {
    ExResult r = ex_main(parse_forest("P4,S3"), 7);
    CHECK(r.value == 21);
    CHECK(r.regime == Regime::kExact);
  }
  SUBCASE("pure path passes through") {
    CHECK(ex_main(parse_forest("P5"), 10).theorem == "path-closed-form");
    CHECK(ex_main(parse_forest("P5"), 10).value == ex_path(10, 5).value);
  }
  SUBCASE("the uncovered corner throws") {
    CHECK_THROWS_AS(ex_main(parse_forest("P6,S3"), 30), std::domain_error);
  }
  SUBCASE("star formula gap at n = a + 1 throws") {
    CHECK_THROWS_AS(ex_main(parse_forest("S3"), 4), std::invalid_argument);
    CHECK(ex_main(parse_forest("S3"), 5).value == 5);
  }
}

TEST_CASE("quantified validity bounds") {
  Thresholds t1 = thresholds(parse_forest("P4,S3"));
  CHECK(*t1.n1 == Rat(26));
  CHECK(*t1.n2 == Rat(29));
  Thresholds t2 = thresholds(parse_forest("P2,S5"));
  CHECK(*t2.n1 == Rat(43));
  CHECK(*t2.n2 == Rat(43));
  Thresholds t3 = thresholds(parse_forest("P3,P3,S4"));
  CHECK(*t3.n1 == Rat(91, 2));
  CHECK(*t3.n2 == Rat(51));
  Thresholds t4 = thresholds(parse_forest("P4,P4,S3"));
  CHECK(*t4.n1 == Rat(36));
  CHECK(*t4.n2 == Rat(45));
  CHECK(*t4.big_l == Rat(4));
  Thresholds t5 = thresholds(parse_forest("S3,S3"));
  CHECK_FALSE(t5.n1.has_value());
  CHECK(*t5.n2 == Rat(26));

  CHECK_THROWS_AS(thresholds(parse_forest("P3,S3")), std::invalid_argument);
  CHECK_THROWS_AS(thresholds(parse_forest("P4,S4,S3")), std::invalid_argument);
  CHECK_THROWS_AS(thresholds(parse_forest("P4")), std::invalid_argument);
  CHECK_THROWS_AS(thresholds(parse_forest("P4,P3,S3")), std::invalid_argument);
}
