#include "mp4/arthur.hpp"
#include "mp4/verify.hpp"

#include <doctest.h>

using namespace mp4;

TEST_CASE("diagonal entry rendering") {
    CHECK(SatakeEntry{char_of("chi"), Rat(1, 2)}.str() == "chi*q^1/2");
    CHECK(SatakeEntry{char_of("chi"), Rat(0)}.str() == "chi");
    CHECK(SatakeEntry{{}, Rat(-3, 2)}.str() == "q^(-3/2)");
    RelationSet rel;
    Satake s = satake_from_pairs({{char_of("chi"), Rat(1, 2)}}, rel);
    CHECK(s.size() == 2);
    CHECK(satake_str(s).rfind("diag(", 0) == 0);
}

TEST_CASE("symplectic closure") {
    RelationSet rel = RelationSet::parse("chi^2=1");
    Satake closed = satake_from_pairs(
        {{char_of("chi"), Rat(1, 2)}, {char_of("mu"), Rat(0)}}, rel);
    CHECK(symplectically_closed(closed, rel));
    Satake open = closed;
    open[0].e += 1;
    CHECK(!symplectically_closed(open, rel));
    CHECK_THROWS_AS(near_equivalent(open, closed, rel), ParseError);
}

TEST_CASE("parameter constraints") {
    RelationSet free;
    RelationSet quad = RelationSet::parse("chi^2=1,mu^2=1,chi!=mu");
    CHECK_NOTHROW(satake_of_param(ParamType::Tempered, {"chi", "mu"}, free));
    CHECK_THROWS_AS(satake_of_param(ParamType::Soudry, {"chi", "mu"}, free),
                    ParseError);
    CHECK_NOTHROW(satake_of_param(ParamType::Soudry, {"chi", "mu"}, quad));
    CHECK_THROWS_AS(
        satake_of_param(ParamType::SaitoKurokawa, {"chi", "mu"}, free),
        ParseError);
    CHECK_THROWS_AS(satake_of_param(ParamType::HPS, {"chi", "mu"},
                                    RelationSet::parse("chi^2=1,mu^2=1")),
                    ParseError);
    CHECK_NOTHROW(satake_of_param(ParamType::HPS, {"chi", "mu"}, quad));
    CHECK_THROWS_AS(satake_of_param(ParamType::Principal, {"chi"}, free),
                    ParseError);
    CHECK_THROWS_AS(satake_of_param(ParamType::Tempered, {"chi"}, free),
                    ParseError);
    CHECK(param_type_from_name("saito_kurokawa") == ParamType::SaitoKurokawa);
    CHECK(param_type_name(ParamType::HPS) == "hps");
    CHECK_THROWS_AS(param_type_from_name("yoshida"), ParseError);
}

TEST_CASE("quotient and parameter classes match family by family") {
    // Rank two family against the Soudry class.
    RelationSet srel = RelationSet({char_mul(char_of("chi"), char_of("mu"))}, {});
    SiegelDatum sd{true, true};
    auto spts = classify_siegel(sd);
    REQUIRE(spts.size() == 1);
    Satake q = satake_of_quotient(spts[0], {"chi", "mu"}, srel);
    Satake p = satake_of_param(ParamType::Soudry, {"chi", "mu"}, srel);
    CHECK(near_equivalent(q, p, srel));
    CHECK(near_equivalent(q, p, srel) == near_equivalent_bruteforce(q, p, srel));

    // Cuspidal family on the other maximal parabolic.
    RelationSet krel = RelationSet::parse("chi^2=1");
    NonSiegelDatum kd;
    kd.type = NonSiegelDatum::SigmaType::Lpi;
    kd.rel = krel;
    kd.central_value_nonzero = true;
    auto kpts = classify_nonsiegel(kd);
    REQUIRE(kpts.size() == 1);
    CHECK(near_equivalent(
        satake_of_quotient(kpts[0], {"chi", "mu"}, krel),
        satake_of_param(ParamType::SaitoKurokawa, {"chi", "mu"}, krel), krel));

    // Theta family at 3/2 against the one-character class.
    RelationSet prel = RelationSet::parse("chi=eta,eta^2=1");
    NonSiegelDatum pd;
    pd.type = NonSiegelDatum::SigmaType::ETF;
    pd.rel = prel;
    auto ppts = classify_nonsiegel(pd);
    REQUIRE(ppts.size() == 1);
    Satake pq = satake_of_quotient(ppts[0], {"chi", "eta"}, prel);
    Satake pp = satake_of_param(ParamType::Principal, {"chi"}, prel);
    CHECK(near_equivalent(pq, pp, prel));

    // The tempered class matches none of the residual families.
    RelationSet qrel = RelationSet::parse("chi^2=1,mu^2=1,chi!=mu");
    Satake t = satake_of_param(ParamType::Tempered, {"chi", "mu"}, qrel);
    Satake h = satake_of_param(ParamType::HPS, {"chi", "mu"}, qrel);
    CHECK(!near_equivalent(t, h, qrel));
    CHECK(near_equivalent(t, h, qrel) == near_equivalent_bruteforce(t, h, qrel));
}

TEST_CASE("near equivalence agrees with the brute force orbit search") {
    RelationSet rel = RelationSet::parse("chi^2=1,mu^2=1,chi!=mu");
    std::vector<Satake> classes = {
        satake_of_param(ParamType::Tempered, {"chi", "mu"}, rel),
        satake_of_param(ParamType::HPS, {"chi", "mu"}, rel),
        satake_of_param(ParamType::SaitoKurokawa, {"chi", "mu"}, rel),
        satake_of_param(ParamType::Principal, {"chi"}, rel),
    };
    // With both characters quadratic the Soudry and HPS localizations agree;
    // the classes above stay pairwise distinct.
    CHECK(near_equivalent(satake_of_param(ParamType::Soudry, {"chi", "mu"}, rel),
                          classes[1], rel));
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = 0; j < classes.size(); ++j) {
            bool fast = near_equivalent(classes[i], classes[j], rel);
            CHECK(fast == near_equivalent_bruteforce(classes[i], classes[j], rel));
            CHECK(fast == (i == j));
        }
    // Inverting one pair lands in the same orbit.
    Satake a = satake_from_pairs({{char_of("chi"), Rat(1, 2)},
                                  {char_of("mu"), Rat(0)}}, rel);
    Satake b = satake_from_pairs({{char_of("chi"), Rat(-1, 2)},
                                  {char_of("mu"), Rat(0)}}, rel);
    CHECK(near_equivalent(a, b, rel));
}

TEST_CASE("matched residual families") {
    CHECK(matched_family(ParamType::Tempered).empty());
    CHECK(matched_family(ParamType::Soudry) == "J_P1(1/2,tau)");
    CHECK(matched_family(ParamType::SaitoKurokawa) == "J_pi(1/2,chi,pi)");
    CHECK(matched_family(ParamType::HPS) ==
          "J_ETF(1/2,chi,sigma_eta) and J_B(a3/2,chi(x)mu)");
    CHECK(matched_family(ParamType::Principal) ==
          "J_ETF(3/2,chi,sigma_eta) and J_B(a1/2+a3,chi(x)mu)");
}
