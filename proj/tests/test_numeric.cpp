#include <doctest.h>

#include "horadam/error.hpp"
#include "horadam/interval.hpp"
#include "horadam/numeric.hpp"

using namespace horadam;

TEST_CASE("parse_rational reads decimals exactly") {
  CHECK(parse_rational("1e-20") == Rational(Integer(1), Integer("100000000000000000000")));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-2.5E1") == Rational(-25));
  CHECK(parse_rational("3/7") == Rational(3, 7));
  CHECK(parse_rational("+.5") == Rational(1, 2));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_rational("1.") == Rational(1));
  for (const char* bad : {"", "e5", "1e", "abc", "1.2.3", "1/0", "--1", "0x10"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("rendering") {
  CHECK(fraction_string(Rational(4)) == "4/1");
  CHECK(fraction_string(parse_rational("-3/9")) == "-1/3");
  CHECK(decimal_string(Rational(1, 3), 5) == "0.33333");
  CHECK(decimal_string(Rational(2, 3), 3) == "0.667");
  CHECK(decimal_string(Rational(-1, 8), 2) == "-0.13");
  CHECK(decimal_string(Rational(-1, 1000), 2) == "0.00");
  CHECK(decimal_string(Rational(21), 0) == "21");
  CHECK(decimal_string(Rational(1, 40), 4) == "0.0250");
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(4) == Rational(16));
}

TEST_CASE("interval arithmetic") {
  const RationalInterval x(Rational(-1), Rational(2));
  const RationalInterval y(Rational(3), Rational(5));
  CHECK(x + y == RationalInterval(Rational(2), Rational(7)));
  CHECK(x - y == RationalInterval(Rational(-6), Rational(-1)));
  CHECK(x * y == RationalInterval(Rational(-5), Rational(10)));
  CHECK(y / y == RationalInterval(Rational(3, 5), Rational(5, 3)));
  CHECK(-x == RationalInterval(Rational(-2), Rational(1)));
  CHECK(x.magnitude() == 2);
  CHECK(x.contains_zero());
  CHECK_THROWS_AS(y / x, Error);
  CHECK_THROWS_AS(RationalInterval(Rational(2), Rational(1)), Error);
  CHECK(reciprocal(RationalInterval(Rational(1, 3), Rational(1, 2))) == RationalInterval(Rational(2), Rational(3)));
  CHECK(reciprocal(RationalInterval(Rational(-1, 2), Rational(-1, 4))) ==
        RationalInterval(Rational(-4), Rational(-2)));
}
