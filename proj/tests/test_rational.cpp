#include "doctest.h"
#include "lieherm/rational.hpp"
#include "lieherm/tpoly.hpp"

using namespace lieherm;

TEST_CASE("rational text round trip") {
  CHECK(rat_str(Rational(1, 2)) == "1/2");
  CHECK(rat_str(Rational(-3, 6)) == "-1/2");
  CHECK(rat_str(Rational(5)) == "5");
  CHECK(rat_str(Rational(0)) == "0");
  CHECK(rat_str(Rational(-13, 2)) == "-13/2");

  CHECK(rat_parse("3/4") == Rational(3, 4));
  CHECK(rat_parse("-5") == Rational(-5));
  CHECK(rat_parse("0") == Rational(0));
  CHECK(rat_parse("7/1") == Rational(7));
  CHECK(rat_parse("2/4") == Rational(1, 2));
  CHECK(rat_parse("-10/4") == Rational(-5, 2));
  CHECK(rat_str(rat_parse("-13/2")) == "-13/2");
}

TEST_CASE("rational parse rejections") {
  CHECK_THROWS_AS(rat_parse(""), ParseError);
  CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
  CHECK_THROWS_AS(rat_parse("1/-2"), ParseError);
  CHECK_THROWS_AS(rat_parse("abc"), ParseError);
  CHECK_THROWS_AS(rat_parse("1.5"), ParseError);
  CHECK_THROWS_AS(rat_parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(rat_parse("+2"), ParseError);
  CHECK_THROWS_AS(rat_parse("-"), ParseError);
  CHECK_THROWS_AS(rat_parse("3/"), ParseError);
  CHECK_THROWS_AS(rat_parse("/3"), ParseError);
  CHECK_THROWS_AS(rat_parse(" 1"), ParseError);
}

TEST_CASE("exact square roots") {
  REQUIRE(exact_sqrt(Rational(9, 4)));
  CHECK(*exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  REQUIRE(exact_sqrt(Rational(0)));
  CHECK(*exact_sqrt(Rational(0)) == 0);
  REQUIRE(exact_sqrt(Rational(16)));
  CHECK(*exact_sqrt(Rational(16)) == 4);
  CHECK(!exact_sqrt(Rational(2)));
  CHECK(!exact_sqrt(Rational(-1)));
  CHECK(!exact_sqrt(Rational(1, 3)));
  CHECK(*exact_sqrt(Rational(144, 49)) == Rational(12, 7));
}

TEST_CASE("polynomial roots") {
  CHECK(!rational_roots(TPoly(0, 0, 0)));

  REQUIRE(rational_roots(TPoly(5, 0, 0)));
  CHECK(rational_roots(TPoly(5, 0, 0))->empty());

  auto lin = rational_roots(TPoly(1, 2, 0));
  REQUIRE(lin);
  CHECK(*lin == std::vector<Rational>{Rational(-1, 2)});

  auto quad = rational_roots(TPoly(-4, 0, 1));
  REQUIRE(quad);
  CHECK(*quad == std::vector<Rational>{Rational(-2), Rational(2)});

  CHECK(!rational_roots(TPoly(-2, 0, 1)));

  auto none = rational_roots(TPoly(1, 0, 1));
  REQUIRE(none);
  CHECK(none->empty());

  auto two = rational_roots(TPoly(1, -3, 2));
  REQUIRE(two);
  CHECK(*two == std::vector<Rational>{Rational(1, 2), Rational(1)});

  auto dbl = rational_roots(TPoly(1, -2, 1));
  REQUIRE(dbl);
  CHECK(*dbl == std::vector<Rational>{Rational(1)});
}

TEST_CASE("interpolation recovers coefficients") {
  const TPoly p(Rational(3), Rational(-2), Rational(5, 7));
  const TPoly q = interpolate_quadratic(p.eval(0), p.eval(1), p.eval(2));
  CHECK(q == p);

  const TPoly a(Rational(1, 3), Rational(4), Rational(0));
  CHECK(interpolate_affine(a.eval(0), a.eval(1)) == a);

  CHECK(TPoly(1, 2, 3).eval(Rational(1, 2)) == Rational(11, 4));
  CHECK(TPoly().is_zero());
  CHECK(TPoly(0, 1, 0).degree() == 1);
  CHECK(TPoly(0, 0, 0).degree() == -1);
}
