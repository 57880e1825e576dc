#include "mp4/lseries.hpp"

#include <doctest.h>

#include <random>

using namespace mp4;

namespace {
Coeff sym(const std::string& n, int e = 1) { return Coeff::symbol(n, e); }
} // namespace

TEST_CASE("series basics") {
    Series z = Series::zero(2);
    CHECK(z.is_zero());
    CHECK(z.pole_order() == 0);
    Series t = Series::term(-1, Coeff::one(), 2);
    CHECK(t.leading_power() == -1);
    CHECK(t.pole_order() == 1);
    CHECK(t.coeff(-1) == Coeff::one());
    CHECK(t.coeff(0).is_zero());
    CHECK_THROWS_AS(t.coeff(3), UnsupportedCase);
    CHECK((t - t).is_zero());
}

TEST_CASE("series multiplication and inversion") {
    Series a = Series::term(-1, Coeff::rational(Rat(2)), 3) +
               Series::term(1, Coeff::rational(Rat(1, 3)), 3);
    Series inv = a.inverse();
    Series one = a * inv;
    CHECK(one.coeff(0) == Coeff::one());
    for (int p = 1; p <= one.hi; ++p) CHECK(one.coeff(p).is_zero());
    Series nonunit = Series::constant(sym("a0") + Coeff::one(), 2);
    CHECK_THROWS_AS(nonunit.inverse(), UnsupportedCase);
}

TEST_CASE("zeta expansion at its poles") {
    RelationSet rel;
    Series at1 = expand_L(1, 1, {}, rel, 2);
    CHECK(at1.coeff(-1) == sym("a-1"));
    CHECK(at1.coeff(0) == sym("a0"));
    CHECK(at1.coeff(1) == sym("a1"));
    // Functional equation at 0: zeta(b u) = zeta(1 - b u).
    Series at0 = expand_L(0, 1, {}, rel, 2);
    CHECK(at0.coeff(-1) == (Rat(-1) * sym("a-1")));
    CHECK(at0.coeff(0) == sym("a0"));
    CHECK(at0.coeff(1) == (Rat(-1) * sym("a1")));
    // Doubled slope scales the residue and the Taylor terms.
    Series fast = expand_L(1, 2, {}, rel, 2);
    CHECK(fast.coeff(-1) == (Rat(1, 2) * sym("a-1")));
    CHECK(fast.coeff(1) == (Rat(2) * sym("a1")));
    CHECK_THROWS_AS(expand_L(1, 0, {}, rel, 2), UnsupportedCase);
}

TEST_CASE("zeta expansion at regular points") {
    RelationSet rel;
    Series s = expand_L(2, 1, {}, rel, 2);
    CHECK(s.coeff(0) == sym("zeta(2)"));
    CHECK(s.coeff(1) == sym("zeta(2)@1"));
    CHECK(s.coeff(0).is_unit());
    CHECK(!s.coeff(1).is_unit());
    // Reflection below the critical line: zeta(-1 - u) = zeta(2 + u).
    Series r = expand_L(-1, -1, {}, rel, 2);
    CHECK(r.coeff(0) == sym("zeta(2)"));
    CHECK(r.coeff(1) == sym("zeta(2)@1"));
}

TEST_CASE("nontrivial character expansions") {
    RelationSet rel;
    CharacterExpr chi = char_of("chi");
    Series edge = expand_L(1, 1, chi, rel, 1);
    CHECK(edge.coeff(0) == sym("L(1,chi)"));
    CHECK(edge.coeff(0).is_unit());
    // Critical strip values are opaque and non-invertible.
    Series strip = expand_L(Rat(1, 2), 1, chi, rel, 1);
    CHECK(strip.coeff(0) == sym("L(1/2,chi)"));
    CHECK(!strip.coeff(0).is_unit());
    // Reflection: L(-1/2 + u, chi) = eps(-1/2 + u, chi) L(3/2 - u, chi^-1).
    Series refl = expand_L(Rat(-1, 2), 1, chi, rel, 0);
    CHECK(refl.coeff(0) ==
          (sym("eps(-1/2,chi)") * sym("L(3/2,chi^-1)")));
    // Characters are reduced before naming.
    RelationSet quad = RelationSet::parse("chi^2=1");
    Series red = expand_L(2, 1, char_of("chi", 3), quad, 0);
    CHECK(red.coeff(0) == sym("L(2,chi)"));
}

TEST_CASE("epsilon expansion") {
    RelationSet rel;
    CHECK(expand_eps(0, 1, {}, rel, 2) ==
          Series::constant(Coeff::one(), 2));
    Series e = expand_eps(1, 1, char_of("chi"), rel, 1);
    CHECK(e.coeff(0) == sym("eps(1,chi)"));
    CHECK(e.coeff(0).is_unit());
}

TEST_CASE("expand_lterm substitutes the along coordinate") {
    RelationSet rel;
    LTerm t{LKind::L, AffineForm::var("y") + AffineForm(1), {}};
    Series s = expand_lterm(t, "y", Rat(0), rel, 2);
    CHECK(s.coeff(-1) == sym("a-1"));
    LTerm bad{LKind::L, AffineForm::var("w"), {}};
    CHECK_THROWS(expand_lterm(bad, "y", Rat(0), rel, 2));
}

TEST_CASE("order bookkeeping") {
    RelationSet rel;
    CHECK(order_at_L(1, {}, rel).order == -1);
    CHECK(order_at_L(0, {}, rel).order == -1);
    CHECK(order_at_L(2, {}, rel).order == 0);
    OrderInfo strip = order_at_L(Rat(1, 2), char_of("chi"), rel);
    CHECK(strip.order == 0);
    CHECK(!strip.known_nonzero);
    CHECK(order_at_L(1, char_of("chi"), rel).known_nonzero);
}

TEST_CASE("ring laws against a convolution oracle") {
    std::mt19937 rng(777);
    auto rnd = [&]() {
        return Rat(static_cast<int>(rng() % 11) - 5,
                   1 + static_cast<int>(rng() % 6));
    };
    const int hi = 3;
    auto rnd_series = [&]() {
        Series s = Series::zero(hi);
        for (int p = -2; p <= hi; ++p) {
            Rat q = rnd();
            if (q != 0) s.c[p] = Coeff::rational(q);
        }
        return s;
    };
    for (int it = 0; it < 50; ++it) {
        Series a = rnd_series(), b = rnd_series();
        Series prod = a * b;
        if (a.is_zero() || b.is_zero()) {
            CHECK(prod.is_zero());
            continue;
        }
        for (int p = a.leading_power() + b.leading_power(); p <= prod.hi; ++p) {
            Coeff acc;
            for (const auto& [pa, va] : a.c) {
                auto it2 = b.c.find(p - pa);
                if (it2 != b.c.end()) acc += va * it2->second;
            }
            CHECK(prod.coeff(p) == acc);
        }
        CHECK(prod == b * a);
    }
}
