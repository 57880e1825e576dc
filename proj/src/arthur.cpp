#include "mp4/arthur.hpp"

#include <algorithm>

namespace mp4 {

std::string SatakeEntry::str() const {
    std::string c = char_str(chi);
    if (e == 0) return c;
    std::string q = "q^" + (e < 0 ? "(" + rat_str(e) + ")" : rat_str(e));
    return c == "1" ? q : c + "*" + q;
}

std::string satake_str(const Satake& s) {
    std::string out = "diag(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += s[i].str();
    }
    return out + ")";
}

Satake satake_from_pairs(const std::vector<std::pair<CharacterExpr, Rat>>& pairs,
                         const RelationSet& rel) {
    Satake s;
    for (const auto& [chi, e] : pairs) {
        s.push_back({rel.reduce(chi), e});
        s.push_back({rel.reduce(char_inv(chi)), -e});
    }
    std::sort(s.begin(), s.end());
    return s;
}

bool symplectically_closed(const Satake& s, const RelationSet& rel) {
    Satake rest = s;
    while (!rest.empty()) {
        SatakeEntry a = rest.back();
        rest.pop_back();
        SatakeEntry inv{rel.reduce(char_inv(a.chi)), -a.e};
        auto it = std::find(rest.begin(), rest.end(), inv);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    return true;
}

ParamType param_type_from_name(const std::string& name) {
    if (name == "tempered") return ParamType::Tempered;
    if (name == "soudry") return ParamType::Soudry;
    if (name == "saito_kurokawa") return ParamType::SaitoKurokawa;
    if (name == "hps") return ParamType::HPS;
    if (name == "principal") return ParamType::Principal;
    throw ParseError("unknown parameter type: " + name);
}

std::string param_type_name(ParamType t) {
    switch (t) {
    case ParamType::Tempered: return "tempered";
    case ParamType::Soudry: return "soudry";
    case ParamType::SaitoKurokawa: return "saito_kurokawa";
    case ParamType::HPS: return "hps";
    case ParamType::Principal: return "principal";
    }
    throw std::logic_error("bad parameter type");
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ParseError("parameter type constraint violated: " + what);
}

} // namespace

Satake satake_of_param(ParamType t, const std::vector<std::string>& chars,
                       const RelationSet& rel) {
    auto sym = [&](size_t i) {
        if (i >= chars.size())
            throw ParseError("missing character symbol for parameter type " +
                             param_type_name(t));
        return char_of(chars[i]);
    };
    switch (t) {
    case ParamType::Tempered:
        return satake_from_pairs({{sym(0), Rat(0)}, {sym(1), Rat(0)}}, rel);
    case ParamType::Soudry: {
        CharacterExpr chi = sym(0), mu = sym(1);
        bool dual = rel.is_trivial(char_mul(chi, mu)) ||
                    (rel.is_trivial(char_pow(chi, 2)) &&
                     rel.is_trivial(char_pow(mu, 2)));
        require(dual, "soudry needs a self-dual local datum");
        return satake_from_pairs({{chi, Rat(1, 2)}, {mu, Rat(1, 2)}}, rel);
    }
    case ParamType::SaitoKurokawa: {
        CharacterExpr chi = sym(0), mu = sym(1);
        require(rel.is_trivial(char_pow(chi, 2)), "saito_kurokawa needs chi^2=1");
        return satake_from_pairs({{chi, Rat(1, 2)}, {mu, Rat(0)}}, rel);
    }
    case ParamType::HPS: {
        CharacterExpr chi = sym(0), mu = sym(1);
        require(rel.is_trivial(char_pow(chi, 2)) &&
                    rel.is_trivial(char_pow(mu, 2)),
                "hps needs chi^2=mu^2=1");
        require(rel.declared_nontrivial(char_mul(chi, char_inv(mu))),
                "hps needs chi != mu");
        return satake_from_pairs({{chi, Rat(1, 2)}, {mu, Rat(1, 2)}}, rel);
    }
    case ParamType::Principal: {
        CharacterExpr chi = sym(0);
        require(rel.is_trivial(char_pow(chi, 2)), "principal needs chi^2=1");
        return satake_from_pairs({{chi, Rat(3, 2)}, {chi, Rat(1, 2)}}, rel);
    }
    }
    throw std::logic_error("bad parameter type");
}

Satake satake_of_quotient(const ResidualPoint& rp,
                          const std::vector<std::string>& chars,
                          const RelationSet& rel) {
    auto sym = [&](size_t i) {
        if (i >= chars.size())
            throw ParseError("missing character symbol for quotient " +
                             rp.quotient_label);
        return char_of(chars[i]);
    };
    auto e = weight_e_coords(rp.point);
    if (rp.source == "siegel" || rp.source == "borel")
        return satake_from_pairs(
            {{sym(0), e[0].value()}, {sym(1), e[1].value()}}, rel);
    if (rp.source == "nonsiegel") {
        // Point s*b1 has e-coordinates (s, 0); the Mp2 constituent supplies
        // the second pair: exponent -1/2 for a theta representation, 0 for a
        // cuspidal pi with unramified Satake (mu, mu^-1).
        bool theta = rp.quotient_label.rfind("J_ETF", 0) == 0;
        Rat e2 = theta ? Rat(-1, 2) : Rat(0);
        return satake_from_pairs({{sym(0), e[0].value()}, {sym(1), e2}}, rel);
    }
    throw ParseError("unknown residual source: " + rp.source);
}

bool near_equivalent(const Satake& a, const Satake& b, const RelationSet& rel) {
    if (!symplectically_closed(a, rel) || !symplectically_closed(b, rel))
        throw ParseError("near-equivalence requires symplectically closed input");
    // The signed-permutation action permutes the diagonal entries, so the
    // orbit is determined by the reduced multiset itself.
    auto norm = [&](const Satake& s) {
        Satake r;
        for (const SatakeEntry& x : s) r.push_back({rel.reduce(x.chi), x.e});
        std::sort(r.begin(), r.end());
        return r;
    };
    return norm(a) == norm(b);
}

std::string matched_family(ParamType t) {
    switch (t) {
    case ParamType::Tempered: return "";
    case ParamType::Soudry: return "J_P1(1/2,tau)";
    case ParamType::SaitoKurokawa: return "J_pi(1/2,chi,pi)";
    case ParamType::HPS: return "J_ETF(1/2,chi,sigma_eta) and J_B(a3/2,chi(x)mu)";
    case ParamType::Principal:
        return "J_ETF(3/2,chi,sigma_eta) and J_B(a1/2+a3,chi(x)mu)";
    }
    throw std::logic_error("bad parameter type");
}

} // namespace mp4
