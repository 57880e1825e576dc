#include "mp4/report.hpp"

#include <sstream>

namespace mp4::report {

Json table_json() {
    Json rows = Json::array();
    for (Weyl w : all_weyl) {
        Json row;
        row["weyl"] = weyl_name(w);
        Json imgs;
        for (RootId r : all_roots)
            imgs[root_name(r)] = root_name(weyl_act_root(w, {r, false}));
        row["roots"] = imgs;
        row["torus"] = torus_conj(w).str();
        rows.push_back(std::move(row));
    }
    return Json{{"table", "weyl"}, {"rows", rows}};
}

std::string table_text() {
    std::ostringstream os;
    os << "w      a1    a2    a3    a4    torus\n";
    for (Weyl w : all_weyl) {
        std::string name = weyl_name(w);
        os << name << std::string(7 - name.size(), ' ');
        for (RootId r : all_roots) {
            std::string img = root_name(weyl_act_root(w, {r, false}));
            os << img << std::string(6 - img.size(), ' ');
        }
        os << torus_conj(w).str() << "\n";
    }
    return os.str();
}

Json series_json(const Series& s) {
    Json terms = Json::array();
    for (const auto& [p, c] : s.c)
        terms.push_back(Json{{"power", p}, {"coefficient", c.str()}});
    return Json{{"var", s.var}, {"trusted_through", s.hi}, {"terms", terms}};
}

Json gk_json(const GKProduct& p) {
    Json factors = Json::array();
    for (const GKFactor& f : p) {
        Json j{{"root", root_name(f.root)},
               {"num", f.num.str()},
               {"den", f.den.str()}};
        if (f.eps) j["eps"] = f.eps->str();
        factors.push_back(std::move(j));
    }
    return factors;
}

Json constant_term_json(Parabolic par,
                        const std::vector<std::pair<Weyl, GKProduct>>& ct) {
    Json terms = Json::array();
    for (const auto& [w, p] : ct)
        terms.push_back(Json{{"weyl", weyl_name(w)},
                             {"coefficient", gk_str(p)},
                             {"factors", gk_json(p)}});
    return Json{{"parabolic", parabolic_name(par)}, {"terms", terms}};
}

std::string constant_term_text(
    Parabolic par, const std::vector<std::pair<Weyl, GKProduct>>& ct) {
    std::ostringstream os;
    os << "constant term along " << parabolic_name(par) << "\n";
    for (const auto& [w, p] : ct) {
        std::string name = weyl_name(w);
        os << "  " << name << std::string(7 - name.size(), ' ') << gk_str(p)
           << "\n";
    }
    return os.str();
}

Json opsum_json(const OpSum& s) {
    Json terms = Json::array();
    for (const auto& [prod, c] : s.terms)
        terms.push_back(
            Json{{"op", op_product_str(prod)}, {"coefficient", c.str()}});
    return terms;
}

Json residue_json(const ResidueResult& r) {
    Json per = Json::array();
    for (const WeylContribution& wc : r.terms) {
        Json j;
        j["weyl"] = weyl_name(wc.w);
        j["laurent"] = series_json(wc.scalar_series)["terms"];
        j["operator_terms"] = opsum_json(wc.contrib);
        per.push_back(std::move(j));
    }
    Json j;
    j["path"] = r.path;
    j["point"] = r.point.str();
    j["per-weyl"] = per;
    j["total"] = opsum_json(r.total);
    j["square_integrable"] = r.square_integrable;
    return j;
}

std::string residue_text(const ResidueResult& r) {
    std::ostringstream os;
    os << "path " << r.path << ", point " << r.point.str() << "\n";
    for (const WeylContribution& wc : r.terms) {
        if (!wc.along) continue;
        std::string name = weyl_name(wc.w);
        os << "  " << name << std::string(7 - name.size(), ' ')
           << "series: " << wc.scalar_series.str() << "\n"
           << "         contribution: " << wc.contrib.str() << "\n";
    }
    os << "total: " << r.total.str() << "\n";
    os << "square integrable: " << (r.square_integrable ? "yes" : "no") << "\n";
    return os.str();
}

Json spectrum_json(const std::vector<ResidualPoint>& pts) {
    Json out = Json::array();
    for (const ResidualPoint& p : pts) {
        Json j;
        j["point"] = p.point.str();
        j["conditions"] = p.conditions;
        j["quotient"] = p.quotient_label;
        j["source"] = p.source;
        Json ws = Json::array();
        for (Weyl w : p.contributing) ws.push_back(weyl_name(w));
        j["contributing"] = ws;
        j["square_integrable"] = p.square_integrable;
        out.push_back(std::move(j));
    }
    return out;
}

std::string spectrum_text(const std::vector<ResidualPoint>& pts) {
    if (pts.empty()) return "no residual points\n";
    std::ostringstream os;
    for (const ResidualPoint& p : pts) {
        os << p.quotient_label << " at " << p.point.str();
        if (!p.conditions.empty()) os << " when " << p.conditions;
        os << " [";
        for (size_t i = 0; i < p.contributing.size(); ++i)
            os << (i ? "," : "") << weyl_name(p.contributing[i]);
        os << "]\n";
    }
    return os.str();
}

Json satake_json(const Satake& s) {
    Json entries = Json::array();
    for (const SatakeEntry& e : s)
        entries.push_back(
            Json{{"char", char_str(e.chi)}, {"exponent", rat_str(e.e)}});
    return Json{{"diag", entries}, {"display", satake_str(s)}};
}

} // namespace mp4::report
