#include "mp4/spectrum.hpp"

#include <map>
#include <set>

namespace mp4 {

std::vector<PoleInfo> siegel_pole_scan(const SiegelDatum& d) {
    std::vector<PoleInfo> out;
    // Coefficient L(2s,tau,Sym^2)/L(2s+1,tau,Sym^2): the symmetric square
    // L-function has a simple pole at 2s = 1 exactly when tau is self-dual
    // with a nontrivial quadratic central character (declared datum fact).
    bool pole = d.self_dual && d.central_character_nontrivial_quadratic;
    PoleInfo p;
    p.s = Rat(1, 2);
    p.condition = "tau self-dual, omega_tau nontrivial quadratic";
    p.order = pole ? 1 : 0;
    if (!pole) p.note = "Sym^2 pole criterion not met";
    out.push_back(std::move(p));
    return out;
}

std::vector<PoleInfo> nonsiegel_pole_scan(const NonSiegelDatum& d) {
    std::vector<PoleInfo> out;
    CharacterExpr chi = char_of("chi");
    CharacterExpr eta = char_of("eta");
    if (d.type == NonSiegelDatum::SigmaType::Lpi) {
        // Coefficient L(s,chi x pi)/L(s+1,chi x pi) * L(2s,chi^2)/L(2s+1,chi^2)
        // with L(s,chi x pi) entire; the only candidate is zeta(2s) at s=1/2.
        bool quad = d.rel.is_trivial(char_pow(chi, 2));
        PoleInfo p;
        p.s = Rat(1, 2);
        p.condition = "chi^2 = 1, L(1/2,chi x pi) != 0";
        p.order = (quad && d.central_value_nonzero) ? 1 : 0;
        if (!quad) p.note = "chi^2 nontrivial: zeta(2s) stays finite";
        else if (!d.central_value_nonzero) p.note = "central value vanishes";
        out.push_back(std::move(p));
        return out;
    }
    // ETF coefficient: L(s-1/2,chi*eta)/L(s+3/2,chi*eta)
    //                  * L(2s,chi^2)/L(2s+1,chi^2).
    CharacterExpr chieta = char_mul(chi, eta);
    bool chi_eq_eta = d.rel.is_trivial(chieta);
    bool chi_quad = d.rel.is_trivial(char_pow(chi, 2));
    {
        PoleInfo p;
        p.s = Rat(3, 2);
        p.condition = "chi = eta";
        p.order = chi_eq_eta ? -order_at_L(Rat(1), chieta, d.rel).order : 0;
        if (!chi_eq_eta) p.note = "L(s-1/2,chi*eta) regular at s=3/2";
        out.push_back(std::move(p));
    }
    {
        PoleInfo p;
        p.s = Rat(1, 2);
        if (chi_eq_eta) {
            // Raw orders: L(0,1) and zeta(1) give two simple poles; the local
            // factors at the even, nonempty set S_sigma contribute a zero of
            // order >= |S_sigma| >= 2, and one more from L(s-1/2) itself.
            int raw = order_at_L(Rat(0), chieta, d.rel).order +
                      order_at_L(Rat(1), char_pow(chi, 2), d.rel).order;
            int adjustment = d.S_sigma_nonempty_even ? 3 : 0;
            p.condition = "chi = eta";
            p.order = std::min(raw + adjustment, 0);
            p.note = d.S_sigma_nonempty_even
                         ? "zero of order >= |S_sigma| >= 2 beats the simple pole"
                         : "S_sigma parity fact missing";
        } else {
            p.condition = "chi^2 = 1, chi_v != eta_v on S_sigma";
            bool pole = chi_quad && d.chi_ne_eta_on_S_sigma;
            p.order = pole ? 1 : 0;
            if (!chi_quad) p.note = "chi^2 nontrivial: zeta(2s) stays finite";
            else if (!d.chi_ne_eta_on_S_sigma)
                p.note = "partial L(0,chi*eta) nonvanishing not declared";
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<ResidualPoint> classify_siegel(const SiegelDatum& d) {
    std::vector<ResidualPoint> out;
    for (const PoleInfo& p : siegel_pole_scan(d)) {
        if (p.order <= 0) continue;
        ResidualPoint rp;
        rp.point = Weight{AffineForm(0), AffineForm(1)}; // (1/2) b2
        rp.conditions = p.condition;
        rp.quotient_label = "J_P1(1/2,tau)";
        rp.source = "siegel";
        rp.contributing = {Weyl::W212};
        rp.square_integrable = is_square_integrable(rp.point, rp.contributing);
        if (rp.square_integrable) out.push_back(std::move(rp));
    }
    return out;
}

std::vector<ResidualPoint> classify_nonsiegel(const NonSiegelDatum& d) {
    if (d.type == NonSiegelDatum::SigmaType::ETF &&
        !d.rel.is_trivial(char_pow(char_of("eta"), 2)))
        throw ParseError("ETF datum requires eta^2 = 1 in the relation set");
    std::vector<ResidualPoint> out;
    for (const PoleInfo& p : nonsiegel_pole_scan(d)) {
        if (p.order <= 0) continue;
        ResidualPoint rp;
        // Point s * b1 in (x, y) coordinates.
        rp.point = Weight{AffineForm(p.s), AffineForm(p.s)};
        rp.conditions = p.condition;
        std::string s = rat_str(p.s);
        rp.quotient_label = d.type == NonSiegelDatum::SigmaType::ETF
                                ? "J_ETF(" + s + ",chi,sigma_eta)"
                                : "J_pi(" + s + ",chi,pi)";
        rp.source = "nonsiegel";
        rp.contributing = {Weyl::W121};
        rp.square_integrable = is_square_integrable(rp.point, rp.contributing);
        if (rp.square_integrable) out.push_back(std::move(rp));
    }
    return out;
}

std::vector<ResidualPoint> classify_borel(const BorelDatum& d) {
    TorusCharacter tc{char_of("chi"), char_of("mu")};
    std::map<Weight, OpSum> totals;
    std::map<Weight, std::set<Weyl>> contributing;
    for (const ResiduePath& path : preset_paths()) {
        ResidueResult r = iterated_residue(path, tc, d.rel);
        totals[r.point] += r.total;
        contributing[r.point].insert(r.contributing.begin(),
                                     r.contributing.end());
    }
    std::vector<ResidualPoint> out;
    for (auto& [pt, sum] : totals) {
        OpSum reduced = apply_axioms(sum, d.rel);
        if (reduced.is_zero()) continue;
        ResidualPoint rp;
        rp.point = pt;
        rp.conditions = d.rel.str();
        rp.quotient_label = "J_B(" + pt.str() + ",chi(x)mu)";
        rp.source = "borel";
        rp.contributing.assign(contributing[pt].begin(), contributing[pt].end());
        rp.square_integrable = is_square_integrable(pt, rp.contributing);
        if (rp.square_integrable) out.push_back(std::move(rp));
    }
    return out;
}

} // namespace mp4
