#include "mp4/coeff.hpp"

#include <doctest.h>

using namespace mp4;

TEST_CASE("rational coefficients form a ring") {
    Coeff a = Coeff::rational(Rat(2, 3));
    Coeff b = Coeff::rational(Rat(-1, 6));
    CHECK((a + b) == Coeff::rational(Rat(1, 2)));
    CHECK((a * b) == Coeff::rational(Rat(-1, 9)));
    CHECK((a - a).is_zero());
    CHECK(a.is_rational());
    CHECK(a.is_unit());
    CHECK((a * a.inverse()) == Coeff::one());
}

TEST_CASE("symbols and invertibility") {
    symtab::declare("unit_sym", true);
    symtab::declare("plain_sym", false);
    Coeff u = Coeff::symbol("unit_sym");
    Coeff p = Coeff::symbol("plain_sym");
    CHECK(u.is_unit());
    CHECK(!p.is_unit());
    CHECK((u * u.inverse()) == Coeff::one());
    CHECK_THROWS(Coeff::symbol("plain_sym", -1));
    CHECK_THROWS(p.inverse());
    CHECK(!(u + p).is_unit());
    // Redeclaring with a different status is a hard error.
    CHECK_THROWS(symtab::declare("unit_sym", false));
}

TEST_CASE("mixed arithmetic and cancellation") {
    symtab::declare("s1", true);
    Coeff s = Coeff::symbol("s1");
    Coeff e = Rat(2) * s + Coeff::rational(Rat(1));
    Coeff f = e * s.inverse();
    CHECK(f == (Coeff::rational(Rat(2)) + Coeff::symbol("s1", -1)));
    CHECK((e - e).is_zero());
    CHECK((s * s) == Coeff::symbol("s1", 2));
    CHECK((Rat(0) * s).is_zero());
}

TEST_CASE("rendering") {
    symtab::declare("zeta(2)", true);
    Coeff c = Rat(1, 2) * (Coeff::symbol("a-1", 2) *
                           Coeff::symbol("zeta(2)", -1));
    CHECK(c.str() == "a-1^2/(2*zeta(2))");
    CHECK(Coeff::rational(Rat(-3, 4)).str() == "-3/4");
    CHECK(Coeff().str() == "0");
    CHECK(c.str_with_power("u", -2) == "a-1^2/(2*zeta(2)*u^2)");
}
