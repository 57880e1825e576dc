#include "mp4/parse.hpp"

#include <doctest.h>

using namespace mp4;

TEST_CASE("weight grammar") {
    CHECK(parse_weight("a3/2") == Weight{AffineForm(0), AffineForm(1)});
    CHECK(parse_weight("1/2*a1 + a3") == Weight{AffineForm(1), AffineForm(2)});
    CHECK(parse_weight("s*b2") ==
          Weight{AffineForm(0), AffineForm::var("s", Rat(2))});
    Weight tz = parse_weight("t*a2/2 + z*a4/2");
    CHECK(tz.x == AffineForm::var("z") - AffineForm::var("t"));
    CHECK(tz.y == AffineForm::var("z") + AffineForm::var("t"));
    CHECK(parse_weight("b1") == Weight{AffineForm(1), AffineForm(1)});
    CHECK(parse_weight("-a1/2 + a1/2").x.is_zero());
    CHECK(parse_weight("2*a1/2") == parse_weight("a1"));
    CHECK(parse_weight("3/2*b1") ==
          Weight{AffineForm(Rat(3, 2)), AffineForm(Rat(3, 2))});
    CHECK(parse_weight(" + a4 ") == parse_weight("a4"));
    CHECK(parse_weight("s*a1 - s*a1 + a3").str() == "a3");
}

TEST_CASE("weight grammar errors") {
    CHECK_THROWS_AS(parse_weight("s"), ParseError);         // no basis symbol
    CHECK_THROWS_AS(parse_weight("1/2"), ParseError);       // no basis symbol
    CHECK_THROWS_AS(parse_weight("a1*a3"), ParseError);     // two basis symbols
    CHECK_THROWS_AS(parse_weight("s*t*a1"), ParseError);    // two variables
    CHECK_THROWS_AS(parse_weight("a1 +"), ParseError);      // dangling operator
    CHECK_THROWS_AS(parse_weight("a1 a3"), ParseError);     // missing operator
    CHECK_THROWS_AS(parse_weight("a1/0"), ParseError);      // zero denominator
    CHECK_THROWS_AS(parse_weight(""), ParseError);
    CHECK_THROWS_AS(parse_weight("a7"), ParseError);        // unknown basis
}

TEST_CASE("rational literals") {
    CHECK(parse_rat("3") == Rat(3));
    CHECK(parse_rat("-1/2") == Rat(-1, 2));
    CHECK(parse_rat(" 7/4 ") == Rat(7, 4));
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/2x"), ParseError);
}
