#include "mp4/spectrum.hpp"

#include <doctest.h>

using namespace mp4;

TEST_CASE("pole scan for the rank two maximal parabolic") {
    SiegelDatum good{true, true};
    auto poles = siegel_pole_scan(good);
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].s == Rat(1, 2));
    CHECK(poles[0].order == 1);
    for (SiegelDatum bad : {SiegelDatum{false, true}, SiegelDatum{true, false},
                            SiegelDatum{false, false}}) {
        auto p = siegel_pole_scan(bad);
        REQUIRE(p.size() == 1);
        CHECK(p[0].order == 0);
        CHECK(!p[0].note.empty());
    }
}

TEST_CASE("rank two classification") {
    auto pts = classify_siegel({true, true});
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].point == Weight{AffineForm(0), AffineForm(1)});
    CHECK(pts[0].quotient_label == "J_P1(1/2,tau)");
    CHECK(pts[0].source == "siegel");
    CHECK(pts[0].contributing == std::vector<Weyl>{Weyl::W212});
    CHECK(pts[0].square_integrable);
    CHECK(classify_siegel({true, false}).empty());
}

TEST_CASE("theta datum on the other maximal parabolic") {
    NonSiegelDatum d;
    d.type = NonSiegelDatum::SigmaType::ETF;
    d.rel = RelationSet::parse("chi=eta,eta^2=1");
    auto poles = nonsiegel_pole_scan(d);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0].s == Rat(3, 2));
    CHECK(poles[0].order == 1);
    // At s = 1/2 the declared even local set kills the double pole.
    CHECK(poles[1].s == Rat(1, 2));
    CHECK(poles[1].order == 0);

    auto pts = classify_nonsiegel(d);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].point == Weight{AffineForm(Rat(3, 2)), AffineForm(Rat(3, 2))});
    CHECK(pts[0].quotient_label == "J_ETF(3/2,chi,sigma_eta)");
    CHECK(pts[0].contributing == std::vector<Weyl>{Weyl::W121});
    CHECK(pts[0].square_integrable);
}

TEST_CASE("theta datum with chi quadratic but different from eta") {
    NonSiegelDatum d;
    d.type = NonSiegelDatum::SigmaType::ETF;
    d.rel = RelationSet::parse("chi^2=1,eta^2=1,chi!=eta");
    d.chi_ne_eta_on_S_sigma = true;
    auto pts = classify_nonsiegel(d);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].point ==
          Weight{AffineForm(Rat(1, 2)), AffineForm(Rat(1, 2))});
    CHECK(pts[0].quotient_label == "J_ETF(1/2,chi,sigma_eta)");
    // Without the local disjointness fact there is no pole.
    d.chi_ne_eta_on_S_sigma = false;
    CHECK(classify_nonsiegel(d).empty());
    // eta must be quadratic for a theta datum.
    NonSiegelDatum bad = d;
    bad.rel = RelationSet::parse("chi^2=1");
    CHECK_THROWS_AS(classify_nonsiegel(bad), ParseError);
}

TEST_CASE("cuspidal datum on the other maximal parabolic") {
    NonSiegelDatum d;
    d.type = NonSiegelDatum::SigmaType::Lpi;
    d.rel = RelationSet::parse("chi^2=1");
    d.central_value_nonzero = true;
    auto pts = classify_nonsiegel(d);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].point ==
          Weight{AffineForm(Rat(1, 2)), AffineForm(Rat(1, 2))});
    CHECK(pts[0].quotient_label == "J_pi(1/2,chi,pi)");
    d.central_value_nonzero = false;
    CHECK(classify_nonsiegel(d).empty());
    d.central_value_nonzero = true;
    d.rel = RelationSet();
    CHECK(classify_nonsiegel(d).empty());
}

TEST_CASE("minimal parabolic classification by residue paths") {
    BorelDatum b1{RelationSet::parse("chi=mu,chi^2=1")};
    auto pts1 = classify_borel(b1);
    REQUIRE(pts1.size() == 1);
    CHECK(pts1[0].point == Weight{AffineForm(1), AffineForm(2)});
    CHECK(pts1[0].quotient_label == "J_B(a1/2+a3,chi(x)mu)");
    CHECK(pts1[0].square_integrable);
    CHECK(pts1[0].contributing == std::vector<Weyl>{Weyl::W1212});

    BorelDatum b2{RelationSet::parse("chi^2=1,mu^2=1,chi!=mu")};
    auto pts2 = classify_borel(b2);
    REQUIRE(pts2.size() == 1);
    CHECK(pts2[0].point == Weight{AffineForm(0), AffineForm(1)});
    CHECK(pts2[0].quotient_label == "J_B(a3/2,chi(x)mu)");
    CHECK(pts2[0].square_integrable);

    // A generic datum leaves nothing square integrable.
    BorelDatum generic{RelationSet()};
    CHECK(classify_borel(generic).empty());
}
