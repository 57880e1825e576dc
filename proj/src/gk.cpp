#include "mp4/gk.hpp"

namespace mp4 {

namespace {

GKProduct build_product(Weyl w, const Weight& lambda, const TorusCharacter& tc,
                        const RelationSet& rel, bool with_eps) {
    GKProduct out;
    for (RootId beta : inversion_set(w)) {
        AffineForm arg = pairing(lambda, {beta, false});
        CharacterExpr chi = char_on_coroot(tc, beta);
        if (!is_short(beta)) {
            arg = Rat(2) * arg;
            chi = char_pow(chi, 2);
        }
        chi = rel.reduce(chi);
        GKFactor f;
        f.root = beta;
        f.num = {LKind::L, arg, chi};
        f.den = {LKind::L, arg + AffineForm(1), chi};
        if (with_eps) f.eps = LTerm{LKind::Eps, arg, chi};
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

GKProduct gk_product(Weyl w, const Weight& lambda, const TorusCharacter& tc,
                     const RelationSet& rel) {
    return build_product(w, lambda, tc, rel, false);
}

GKProduct normalizing_factor(Weyl w, const Weight& lambda,
                             const TorusCharacter& tc, const RelationSet& rel) {
    return build_product(w, lambda, tc, rel, true);
}

Parabolic parabolic_from_name(const std::string& name) {
    if (name == "siegel") return Parabolic::Siegel;
    if (name == "nonsiegel") return Parabolic::NonSiegel;
    if (name == "borel") return Parabolic::Borel;
    throw ParseError("unknown parabolic: " + name);
}

std::string parabolic_name(Parabolic p) {
    switch (p) {
    case Parabolic::Siegel: return "siegel";
    case Parabolic::NonSiegel: return "nonsiegel";
    case Parabolic::Borel: return "borel";
    }
    throw std::logic_error("bad parabolic");
}

const std::vector<Weyl>& omega_set(Parabolic p) {
    static const std::vector<Weyl> siegel = {Weyl::One, Weyl::W212};
    static const std::vector<Weyl> nonsiegel = {Weyl::One, Weyl::W121};
    static const std::vector<Weyl> borel(all_weyl.begin(), all_weyl.end());
    switch (p) {
    case Parabolic::Siegel: return siegel;
    case Parabolic::NonSiegel: return nonsiegel;
    case Parabolic::Borel: return borel;
    }
    throw std::logic_error("bad parabolic");
}

std::vector<std::pair<Weyl, GKProduct>> constant_term(Parabolic p,
                                                      const Weight& lambda,
                                                      const TorusCharacter& tc,
                                                      const RelationSet& rel) {
    std::vector<std::pair<Weyl, GKProduct>> out;
    for (Weyl w : omega_set(p))
        out.emplace_back(w, gk_product(w, lambda, tc, rel));
    return out;
}

std::string gk_str(const GKProduct& p) {
    if (p.empty()) return "1";
    std::string out;
    for (const GKFactor& f : p) {
        if (!out.empty()) out += " * ";
        std::string den = f.den.str();
        if (f.eps) den = "(" + den + "*" + f.eps->str() + ")";
        out += f.num.str() + "/" + den;
    }
    return out;
}

} // namespace mp4
