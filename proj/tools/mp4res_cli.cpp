#include "mp4/parse.hpp"
#include "mp4/report.hpp"
#include "mp4/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using mp4::report::Json;

struct Output {
    std::string format = "text";
    std::string out;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out, "Write the report to a file");
    }

    void emit(const std::string& text, const Json& j) const {
        std::string payload = format == "json" ? j.dump(2) + "\n" : text;
        if (out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out);
            if (!f) throw std::runtime_error("cannot open " + out);
            f << payload;
        }
    }
};

mp4::TorusCharacter chars_of(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw mp4::ParseError("expected two character symbols: " + spec);
    return {mp4::char_of(spec.substr(0, comma)),
            mp4::char_of(spec.substr(comma + 1))};
}

std::vector<std::string> split_list(const std::string& spec) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= spec.size()) {
        size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        if (comma > start) out.push_back(spec.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact constant-term, residue, and residual-spectrum "
                 "calculator for the rank-2 metaplectic group"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "Weyl group action table");
    std::string table_what = "weyl";
    table->add_option("what", table_what)->check(CLI::IsMember({"weyl"}));
    Output table_out;
    table_out.add_flags(table);
    table->callback([&] {
        table_out.emit(mp4::report::table_text(), mp4::report::table_json());
    });

    // gk
    auto* gk = app.add_subcommand(
        "gk", "Intertwining coefficient over the inversion set");
    std::string gk_weyl, gk_lambda, gk_rel, gk_chars = "chi,mu";
    bool gk_normalized = false;
    gk->add_option("--weyl", gk_weyl, "Weyl element, e.g. w212")->required();
    gk->add_option("--lambda", gk_lambda, "Weight expression, e.g. s*b2")
        ->required();
    gk->add_option("--chars", gk_chars, "Torus character symbols")
        ->capture_default_str();
    gk->add_option("--relations", gk_rel, "Character relations");
    gk->add_flag("--normalized", gk_normalized,
                 "Include the epsilon units of the normalizing factor");
    Output gk_out;
    gk_out.add_flags(gk);
    gk->callback([&] {
        mp4::Weyl w = mp4::weyl_from_name(gk_weyl);
        mp4::Weight lam = mp4::parse_weight(gk_lambda);
        mp4::TorusCharacter tc = chars_of(gk_chars);
        mp4::RelationSet rel = mp4::RelationSet::parse(gk_rel);
        mp4::GKProduct p = gk_normalized
                               ? mp4::normalizing_factor(w, lam, tc, rel)
                               : mp4::gk_product(w, lam, tc, rel);
        Json j{{"weyl", gk_weyl},
               {"coefficient", mp4::gk_str(p)},
               {"factors", mp4::report::gk_json(p)}};
        gk_out.emit(gk_weyl + ": " + mp4::gk_str(p) + "\n", j);
    });

    // constant-term
    auto* ct = app.add_subcommand("constant-term",
                                  "Constant term along a parabolic");
    std::string ct_par, ct_lambda, ct_rel, ct_chars = "chi,mu";
    ct->add_option("--parabolic", ct_par, "siegel, nonsiegel, or borel")
        ->required();
    ct->add_option("--lambda", ct_lambda, "Weight expression")->required();
    ct->add_option("--chars", ct_chars)->capture_default_str();
    ct->add_option("--relations", ct_rel, "Character relations");
    Output ct_out;
    ct_out.add_flags(ct);
    ct->callback([&] {
        mp4::Parabolic par = mp4::parabolic_from_name(ct_par);
        mp4::Weight lam = mp4::parse_weight(ct_lambda);
        mp4::TorusCharacter tc = chars_of(ct_chars);
        mp4::RelationSet rel = mp4::RelationSet::parse(ct_rel);
        auto terms = mp4::constant_term(par, lam, tc, rel);
        ct_out.emit(mp4::report::constant_term_text(par, terms),
                    mp4::report::constant_term_json(par, terms));
    });

    // residue
    auto* res = app.add_subcommand("residue",
                                   "Iterated residue along a preset path");
    std::string res_path, res_rel, res_chars = "chi,mu";
    res->add_option("--path", res_path,
                    "S1:y=2, S1:y=1, S1:y=0, S2:z=1/2, or S3:x=0")
        ->required();
    res->add_option("--chars", res_chars)->capture_default_str();
    res->add_option("--relations", res_rel, "Character relations");
    Output res_out;
    res_out.add_flags(res);
    res->callback([&] {
        mp4::ResiduePath path = mp4::preset_path(res_path);
        mp4::TorusCharacter tc = chars_of(res_chars);
        mp4::RelationSet rel = mp4::RelationSet::parse(res_rel);
        mp4::ResidueResult r = mp4::iterated_residue(path, tc, rel);
        std::string text = mp4::report::residue_text(r);
        Json j = mp4::report::residue_json(r);
        bool at_a3_half = (res_path == "S2:z=1/2" || res_path == "S3:x=0") &&
                          rel.is_trivial(mp4::char_mul(
                              tc.first, mp4::char_inv(tc.second))) &&
                          rel.is_trivial(mp4::char_pow(tc.first, 2));
        if (at_a3_half) {
            mp4::ConstantReport c = mp4::constant_report();
            text += "partner-path cancellation: " +
                    std::string(c.cancellation_zero ? "zero" : "nonzero") +
                    "\n";
            text += "derived constant: " + c.derived +
                    " (matches closed form " + c.matches + ")\n";
            j["constant"] = Json{{"value", c.derived},
                                 {"matches", c.matches},
                                 {"cancellation_zero", c.cancellation_zero}};
        }
        res_out.emit(text, j);
    });

    // spectrum
    auto* spec = app.add_subcommand("spectrum",
                                    "Residual points for a parabolic datum");
    std::string sp_par, sp_rel, sp_sigma = "etf";
    bool sp_self_dual = false, sp_central_quad = false, sp_chi_ne_eta = false,
         sp_central_nonzero = false, sp_s_sigma_odd = false;
    spec->add_option("--parabolic", sp_par, "siegel, nonsiegel, or borel")
        ->required();
    spec->add_option("--relations", sp_rel, "Character relations");
    spec->add_option("--sigma", sp_sigma, "nonsiegel inducing type: etf or pi")
        ->check(CLI::IsMember({"etf", "pi"}));
    spec->add_flag("--self-dual", sp_self_dual, "tau is self-dual");
    spec->add_flag("--central-quadratic", sp_central_quad,
                   "omega_tau is nontrivial quadratic");
    spec->add_flag("--chi-ne-eta", sp_chi_ne_eta,
                   "chi_v != eta_v on S_sigma");
    spec->add_flag("--central-nonzero", sp_central_nonzero,
                   "L(1/2,chi x pi) != 0");
    spec->add_flag("--s-sigma-odd", sp_s_sigma_odd,
                   "drop the even-cardinality fact for S_sigma");
    Output sp_out;
    sp_out.add_flags(spec);
    spec->callback([&] {
        mp4::Parabolic par = mp4::parabolic_from_name(sp_par);
        std::vector<mp4::ResidualPoint> pts;
        switch (par) {
        case mp4::Parabolic::Siegel:
            pts = mp4::classify_siegel({sp_self_dual, sp_central_quad});
            break;
        case mp4::Parabolic::NonSiegel: {
            mp4::NonSiegelDatum d;
            d.type = sp_sigma == "pi" ? mp4::NonSiegelDatum::SigmaType::Lpi
                                      : mp4::NonSiegelDatum::SigmaType::ETF;
            d.rel = mp4::RelationSet::parse(sp_rel);
            d.S_sigma_nonempty_even = !sp_s_sigma_odd;
            d.chi_ne_eta_on_S_sigma = sp_chi_ne_eta;
            d.central_value_nonzero = sp_central_nonzero;
            pts = mp4::classify_nonsiegel(d);
            break;
        }
        case mp4::Parabolic::Borel:
            pts = mp4::classify_borel({mp4::RelationSet::parse(sp_rel)});
            break;
        }
        sp_out.emit(mp4::report::spectrum_text(pts),
                    mp4::report::spectrum_json(pts));
    });

    // arthur
    auto* art = app.add_subcommand(
        "arthur", "Satake multiset of a parameter type localization");
    std::string ar_type, ar_chars = "chi,mu", ar_rel;
    art->add_option("--type", ar_type,
                    "tempered, soudry, saito_kurokawa, hps, or principal")
        ->required();
    art->add_option("--chars", ar_chars)->capture_default_str();
    art->add_option("--relations", ar_rel, "Character relations");
    Output ar_out;
    ar_out.add_flags(art);
    art->callback([&] {
        mp4::ParamType t = mp4::param_type_from_name(ar_type);
        mp4::RelationSet rel = mp4::RelationSet::parse(ar_rel);
        mp4::Satake s = mp4::satake_of_param(t, split_list(ar_chars), rel);
        std::string family = mp4::matched_family(t);
        std::string text = ar_type + ": " + mp4::satake_str(s) + "\n";
        text += family.empty() ? "no residual family\n"
                               : "residual family: " + family + "\n";
        Json j{{"type", ar_type},
               {"satake", mp4::report::satake_json(s)},
               {"residual_family", family}};
        ar_out.emit(text, j);
    });

    // verify
    auto* ver = app.add_subcommand("verify", "Run the acceptance identities");
    std::string ver_suite = "paper";
    ver->add_option("--suite", ver_suite)->check(CLI::IsMember({"paper"}));
    Output ver_out;
    ver_out.add_flags(ver);
    int exit_code = 0;
    ver->callback([&] {
        auto results = mp4::run_acceptance_suite();
        Json j = Json::array();
        for (const auto& r : results)
            j.push_back(Json{{"id", r.id},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"detail", r.detail}});
        ver_out.emit(mp4::acceptance_text(results), j);
        for (const auto& r : results)
            if (!r.pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const mp4::UnsupportedCase& e) {
        std::cerr << "unsupported case: " << e.what() << "\n";
        return 2;
    } catch (const mp4::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
