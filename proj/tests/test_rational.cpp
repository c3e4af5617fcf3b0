#include "doctest.h"
#include "localmds/rational.hpp"

using localmds::Rat;

TEST_CASE("arithmetic and normalization") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, 4) == Rat(-3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
  CHECK(Rat(7).floor() == 7);
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).ceil() == -3);
}

TEST_CASE("ordering") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(199) >= Rat(199));
  CHECK(Rat(2, 3) > Rat(3, 5));
}

TEST_CASE("string round trip") {
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(2).str() == "2/1");
  CHECK(Rat::parse("3/2") == Rat(3, 2));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("zero denominator and division") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(Rat(0, 5) == Rat(0));
}
