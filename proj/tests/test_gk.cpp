#include "mp4/gk.hpp"

#include <doctest.h>

using namespace mp4;

namespace {
Weight scale(const char* basis, const AffineForm& k) {
    Weight b = basis_weight(basis);
    return {b.x.value() * k, b.y.value() * k};
}
const AffineForm s = AffineForm::var("s");
} // namespace

TEST_CASE("rank one factors") {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel;
    // Short root: lambda = s*a1/2 against w1.
    GKProduct p1 = gk_product(Weyl::W1, scale("a1", Rat(1, 2) * s), tc, rel);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].root == RootId::A1);
    CHECK(p1[0].num.str() == "L(s,chi*mu^-1)");
    CHECK(p1[0].den.str() == "L(s+1,chi*mu^-1)");
    CHECK(!p1[0].eps);
    // Long root: lambda = s*a2/2 against w2 doubles the argument and squares
    // the character.
    GKProduct p2 = gk_product(Weyl::W2, scale("a2", Rat(1, 2) * s), tc, rel);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].root == RootId::A2);
    CHECK(p2[0].num.str() == "L(2*s,mu^2)");
    CHECK(p2[0].den.str() == "L(2*s+1,mu^2)");
}

TEST_CASE("factor count equals the length") {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel;
    Weight lam{AffineForm::var("x"), AffineForm::var("y")};
    for (Weyl w : all_weyl) {
        GKProduct p = gk_product(w, lam, tc, rel);
        CHECK(static_cast<int>(p.size()) == weyl_length(w));
        auto inv = inversion_set(w);
        for (size_t i = 0; i < p.size(); ++i) CHECK(p[i].root == inv[i]);
    }
}

TEST_CASE("normalizing factor carries epsilon units") {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel;
    GKProduct p = normalizing_factor(Weyl::W1, scale("a1", Rat(1, 2) * s), tc, rel);
    REQUIRE(p.size() == 1);
    REQUIRE(p[0].eps.has_value());
    CHECK(p[0].eps->str() == "eps(s,chi*mu^-1)");
}

TEST_CASE("characters reduce inside the factors") {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel = RelationSet::parse("chi=mu");
    GKProduct p = gk_product(Weyl::W1, scale("a1", Rat(1, 2) * s), tc, rel);
    REQUIRE(p.size() == 1);
    CHECK(p[0].num.str() == "zeta(s)");
    CHECK(p[0].den.str() == "zeta(s+1)");
}

TEST_CASE("omega sets and constant terms") {
    CHECK(omega_set(Parabolic::Siegel) ==
          std::vector<Weyl>{Weyl::One, Weyl::W212});
    CHECK(omega_set(Parabolic::NonSiegel) ==
          std::vector<Weyl>{Weyl::One, Weyl::W121});
    CHECK(omega_set(Parabolic::Borel).size() == 8);
    CHECK(parabolic_from_name("siegel") == Parabolic::Siegel);
    CHECK(parabolic_name(Parabolic::Borel) == "borel");
    CHECK_THROWS_AS(parabolic_from_name("klingen"), ParseError);

    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel;
    auto ct = constant_term(Parabolic::Siegel, scale("b2", s), tc, rel);
    REQUIRE(ct.size() == 2);
    CHECK(ct[0].first == Weyl::One);
    CHECK(ct[0].second.empty());
    CHECK(ct[1].first == Weyl::W212);
    REQUIRE(ct[1].second.size() == 3);
    CHECK(ct[1].second[0].num.str() == "L(2*s,mu^2)");
    CHECK(ct[1].second[1].num.str() == "L(2*s,chi*mu)");
    CHECK(ct[1].second[2].num.str() == "L(2*s,chi^2)");
    CHECK(ct[1].second[2].den.str() == "L(2*s+1,chi^2)");
}

TEST_CASE("gk_str rendering") {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel;
    CHECK(gk_str({}) == "1");
    GKProduct p = gk_product(Weyl::W1, scale("a1", Rat(1, 2) * s), tc, rel);
    CHECK(gk_str(p) == "L(s,chi*mu^-1)/L(s+1,chi*mu^-1)");
    GKProduct n = normalizing_factor(Weyl::W1, scale("a1", Rat(1, 2) * s), tc, rel);
    CHECK(gk_str(n) ==
          "L(s,chi*mu^-1)/(L(s+1,chi*mu^-1)*eps(s,chi*mu^-1))");
}
