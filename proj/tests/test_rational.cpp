#include "doctest.h"
#include "psf/rational.hpp"

using psf::Rat;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(4, -8) == Rat(-1, 2));
  CHECK(Rat(-6, 4).str() == "-3/2");
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0, 7).den == 1);
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(3, 4) * Rat(2, 3) == Rat(1, 2));
  CHECK(Rat(3, 4) / Rat(3, 2) == Rat(1, 2));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("rational ordering uses cross multiplication") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(psf::max(Rat(5, 2), Rat(3)) == Rat(3));
  CHECK(psf::min(Rat(5, 2), Rat(3)) == Rat(5, 2));
}

TEST_CASE("floor and ceil round toward the right infinities") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(5).floor() == 5);
  CHECK(Rat(5).ceil() == 5);
}

TEST_CASE("string form keeps halves as fractions") {
  CHECK(Rat(91, 2).str() == "91/2");
  CHECK(Rat(26).str() == "26");
  CHECK(Rat(91, 2).is_integer() == false);
}
