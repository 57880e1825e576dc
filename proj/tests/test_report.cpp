#include "mp4/report.hpp"

#include <doctest.h>

using namespace mp4;
using report::Json;

namespace {
// Byte round trip: dumping and reparsing must reproduce the document.
void check_round_trip(const Json& j) {
    CHECK(Json::parse(j.dump()) == j);
    CHECK(Json::parse(j.dump(2)) == j);
    CHECK(j.dump() == Json::parse(j.dump()).dump());
}
} // namespace

TEST_CASE("weyl table report") {
    Json j = report::table_json();
    CHECK(j["table"] == "weyl");
    REQUIRE(j["rows"].size() == 8);
    CHECK(j["rows"][0]["weyl"] == "1");
    CHECK(j["rows"][0]["roots"]["a1"] == "a1");
    CHECK(j["rows"][7]["weyl"] == "w1212");
    CHECK(j["rows"][7]["roots"]["a3"] == "-a3");
    CHECK(j["rows"][7]["torus"] == "t(a^-1,b^-1)");
    check_round_trip(j);

    std::string text = report::table_text();
    CHECK(text.find("w1212") != std::string::npos);
    CHECK(text.find("t(b,a)") != std::string::npos);
}

TEST_CASE("series report") {
    RelationSet rel;
    Series s = expand_L(1, 1, {}, rel, 1);
    Json j = report::series_json(s);
    CHECK(j["var"] == "u");
    CHECK(j["trusted_through"] == 1);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["power"] == -1);
    CHECK(j["terms"][0]["coefficient"] == "a-1");
    check_round_trip(j);
}

TEST_CASE("constant term report") {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel;
    Weight lam{AffineForm(0), AffineForm::var("s", Rat(2))}; // s * b2
    auto ct = constant_term(Parabolic::Siegel, lam, tc, rel);
    Json j = report::constant_term_json(Parabolic::Siegel, ct);
    CHECK(j["parabolic"] == "siegel");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["weyl"] == "1");
    CHECK(j["terms"][0]["coefficient"] == "1");
    CHECK(j["terms"][1]["weyl"] == "w212");
    CHECK(j["terms"][1]["factors"].size() == 3);
    check_round_trip(j);

    std::string text = report::constant_term_text(Parabolic::Siegel, ct);
    CHECK(text.find("constant term along siegel") != std::string::npos);
    CHECK(text.find("w212") != std::string::npos);

    Json g = report::gk_json(normalizing_factor(Weyl::W1,
                                                Weight{AffineForm::var("s"),
                                                       AffineForm(0)},
                                                tc, rel));
    REQUIRE(g.size() == 1);
    CHECK(g[0].contains("eps"));
    check_round_trip(g);
}

TEST_CASE("residue report") {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel = RelationSet::parse("chi=mu,chi^2=1");
    ResidueResult r = iterated_residue(preset_path("S1:y=2"), tc, rel);
    Json j = report::residue_json(r);
    CHECK(j["path"] == "S1:y=2");
    CHECK(j["point"] == "a1/2+a3");
    REQUIRE(j["per-weyl"].size() == 8);
    CHECK(j["per-weyl"][0]["weyl"] == "1");
    CHECK(j["per-weyl"][0]["operator_terms"].empty());
    REQUIRE(j["total"].size() == 1);
    CHECK(j["total"][0]["op"] == "R(a1/2+a3,w1212)");
    CHECK(j["square_integrable"] == true);
    check_round_trip(j);

    std::string text = report::residue_text(r);
    CHECK(text.find("path S1:y=2, point a1/2+a3") != std::string::npos);
    CHECK(text.find("square integrable: yes") != std::string::npos);
}

TEST_CASE("spectrum report") {
    auto pts = classify_siegel({true, true});
    Json j = report::spectrum_json(pts);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["point"] == "a3/2");
    CHECK(j[0]["quotient"] == "J_P1(1/2,tau)");
    CHECK(j[0]["source"] == "siegel");
    CHECK(j[0]["contributing"] == Json::array({"w212"}));
    CHECK(j[0]["square_integrable"] == true);
    check_round_trip(j);

    CHECK(report::spectrum_text(pts).find("J_P1(1/2,tau) at a3/2") !=
          std::string::npos);
    CHECK(report::spectrum_text({}) == "no residual points\n");
}

TEST_CASE("satake report") {
    RelationSet rel = RelationSet::parse("chi^2=1");
    Satake s = satake_of_param(ParamType::SaitoKurokawa, {"chi", "mu"}, rel);
    Json j = report::satake_json(s);
    REQUIRE(j["diag"].size() == 4);
    CHECK(j["display"].get<std::string>().rfind("diag(", 0) == 0);
    check_round_trip(j);
}

TEST_CASE("deterministic output") {
    // Two independent computations of the same query emit identical bytes.
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    RelationSet rel = RelationSet::parse("chi^2=1,mu^2=1,chi!=mu");
    auto once = report::residue_json(
        iterated_residue(preset_path("S2:z=1/2"), tc, rel)).dump(2);
    auto twice = report::residue_json(
        iterated_residue(preset_path("S2:z=1/2"), tc, rel)).dump(2);
    CHECK(once == twice);
}
