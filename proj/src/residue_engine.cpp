#include "mp4/residue_engine.hpp"

#include <algorithm>

namespace mp4 {

std::string hyperplane_name(HyperplaneId h) {
    static const char* names[4] = {"S1", "S2", "S3", "S4"};
    return names[static_cast<int>(h)];
}

RootId hyperplane_root(HyperplaneId h) {
    switch (h) {
    case HyperplaneId::S1: return RootId::A1;
    case HyperplaneId::S2: return RootId::A2;
    case HyperplaneId::S3: return RootId::A3;
    case HyperplaneId::S4: return RootId::A4;
    }
    throw std::logic_error("bad hyperplane");
}

std::string hyperplane_equation(HyperplaneId h) {
    switch (h) {
    case HyperplaneId::S1: return "x = 1";
    case HyperplaneId::S2: return "(y-x)/2 = 1/2";
    case HyperplaneId::S3: return "y = 1";
    case HyperplaneId::S4: return "(x+y)/2 = 1/2";
    }
    throw std::logic_error("bad hyperplane");
}

Frame hyperplane_frame(HyperplaneId h, const std::string& frame_name) {
    Frame fr;
    fr.h = h;
    fr.name = frame_name;
    AffineForm u = AffineForm::var("u");
    switch (h) {
    case HyperplaneId::S1:
        if (frame_name != "xy") break;
        fr.along = "y";
        fr.lambda = {AffineForm(1) + u, AffineForm::var("y")};
        return fr;
    case HyperplaneId::S2:
        if (frame_name == "tz") {
            // Lambda = t a2/2 + z a4/2 with t = 1/2 + u; the determinant of
            // the change of basis to (x, y) is 2.
            fr.along = "z";
            fr.lambda = {AffineForm::var("z") - AffineForm(Rat(1, 2)) - u,
                         AffineForm::var("z") + AffineForm(Rat(1, 2)) + u};
            fr.jacobian = 2;
            return fr;
        }
        if (frame_name == "xy") {
            fr.along = "x";
            fr.lambda = {AffineForm::var("x"),
                         AffineForm::var("x") + AffineForm(1) + u};
            return fr;
        }
        break;
    case HyperplaneId::S3:
        if (frame_name != "xy") break;
        fr.along = "x";
        fr.lambda = {AffineForm::var("x"), AffineForm(1) + u};
        return fr;
    case HyperplaneId::S4:
        if (frame_name != "xy") break;
        fr.along = "x";
        fr.lambda = {AffineForm::var("x"),
                     AffineForm(1) - AffineForm::var("x") + Rat(2) * u};
        return fr;
    }
    throw ParseError("no " + frame_name + " frame for " + hyperplane_name(h));
}

std::string HypTerm::str(const std::string& op_label) const {
    std::string out = scalar.str();
    bool paren = out.find(" + ") != std::string::npos ||
                 out.find(" - ") != std::string::npos;
    if (paren) out = "(" + out + ")";
    for (const LTerm& t : nums) out += "*" + t.str();
    std::string den;
    for (const LTerm& t : dens) den += (den.empty() ? "" : "*") + t.str();
    for (const LTerm& t : epses) den += (den.empty() ? "" : "*") + t.str();
    if (!den.empty())
        out += "/" + (den.find('*') != std::string::npos ? "(" + den + ")" : den);
    return out + " * " + op_label;
}

std::optional<HypTerm> residue_along(const Frame& fr, Weyl w,
                                     const TorusCharacter& tc,
                                     const RelationSet& rel) {
    const int hi = 2;
    Series pure = Series::constant(Coeff::one(), hi);
    HypTerm out;
    out.w = w;
    for (RootId beta : inversion_set(w)) {
        AffineForm arg = pairing(fr.lambda, {beta, false});
        CharacterExpr chi = char_on_coroot(tc, beta);
        if (!is_short(beta)) {
            arg = Rat(2) * arg;
            chi = char_pow(chi, 2);
        }
        chi = rel.reduce(chi);
        Rat cu = arg.coeff("u");
        Rat ca = arg.coeff(fr.along);
        if (cu != 0 && ca == 0) {
            Series num = expand_L(arg.constant, cu, chi, rel, hi);
            Series den = expand_L(arg.constant + 1, cu, chi, rel, hi);
            Series eps = expand_eps(arg.constant, cu, chi, rel, hi);
            pure = pure * num * den.inverse() * eps.inverse();
        } else {
            AffineForm a0 = arg.subst("u", AffineForm(0));
            out.nums.push_back({LKind::L, a0, chi});
            out.dens.push_back({LKind::L, a0 + AffineForm(1), chi});
            if (!chi.empty()) out.epses.push_back({LKind::Eps, a0, chi});
        }
    }
    if (pure.is_zero() || pure.pole_order() == 0) return std::nullopt;
    if (pure.pole_order() >= 2)
        throw UnsupportedCase("pole of order " +
                              std::to_string(pure.pole_order()) + " along " +
                              hyperplane_name(fr.h) + " for " + weyl_name(w));
    out.scalar = pure.coeff(-1);
    if (out.scalar.is_zero()) return std::nullopt;
    // Cancel matching numerator/denominator L-factors across the product.
    for (auto it = out.nums.begin(); it != out.nums.end();) {
        auto jt = std::find(out.dens.begin(), out.dens.end(), *it);
        if (jt != out.dens.end()) {
            out.dens.erase(jt);
            it = out.nums.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

const std::vector<ResiduePath>& preset_paths() {
    static const std::vector<ResiduePath> paths = [] {
        std::vector<ResiduePath> p;
        p.push_back({"S1:y=2", hyperplane_frame(HyperplaneId::S1, "xy"), Rat(2)});
        p.push_back({"S1:y=1", hyperplane_frame(HyperplaneId::S1, "xy"), Rat(1)});
        p.push_back({"S1:y=0", hyperplane_frame(HyperplaneId::S1, "xy"), Rat(0)});
        p.push_back(
            {"S2:z=1/2", hyperplane_frame(HyperplaneId::S2, "tz"), Rat(1, 2)});
        // The S3 deformation only picks up half of the full residue.
        p.push_back({"S3:x=0", hyperplane_frame(HyperplaneId::S3, "xy"), Rat(0),
                     Rat(1, 2)});
        return p;
    }();
    return paths;
}

ResiduePath preset_path(const std::string& name) {
    for (const auto& p : preset_paths())
        if (p.name == name) return p;
    throw ParseError("unknown residue path: " + name +
                     " (expected S1:y=2, S1:y=1, S1:y=0, S2:z=1/2, S3:x=0)");
}

namespace {

Weight path_point(const ResiduePath& path) {
    Weight pt;
    pt.x = path.frame.lambda.x.subst("u", AffineForm(0))
               .subst(path.frame.along, AffineForm(path.at));
    pt.y = path.frame.lambda.y.subst("u", AffineForm(0))
               .subst(path.frame.along, AffineForm(path.at));
    return pt;
}

} // namespace

ResidueResult iterated_residue(const ResiduePath& path,
                               const TorusCharacter& tc,
                               const RelationSet& rel) {
    const int hi = 2;
    ResidueResult res;
    res.path = path.name;
    res.point = path_point(path);
    std::array<Rat, 2> vel = {path.frame.lambda.x.coeff(path.frame.along),
                              path.frame.lambda.y.coeff(path.frame.along)};
    Rat scale = path.multiplicity * path.frame.jacobian;
    for (Weyl w : all_weyl) {
        WeylContribution wc;
        wc.w = w;
        wc.along = residue_along(path.frame, w, tc, rel);
        if (wc.along) {
            Series s = Series::constant(wc.along->scalar, hi);
            for (const LTerm& t : wc.along->nums)
                s = s * expand_lterm(t, path.frame.along, path.at, rel, hi);
            for (const LTerm& t : wc.along->dens)
                s = s * expand_lterm(t, path.frame.along, path.at, rel, hi)
                            .inverse();
            for (const LTerm& t : wc.along->epses)
                s = s * expand_lterm(t, path.frame.along, path.at, rel, hi)
                            .inverse();
            wc.scalar_series = s;
            int pole = s.pole_order();
            if (pole > 2)
                throw UnsupportedCase("second-stage pole of order " +
                                      std::to_string(pole) + " at " +
                                      path.name + " for " + weyl_name(w));
            wc.op = taylor_expand(res.point, vel, tc, w, pole >= 2 ? 1 : 0, rel);
            OpSum c;
            if (pole >= 1) c += s.coeff(-1) * wc.op.c0;
            if (pole >= 2) c += s.coeff(-2) * wc.op.c1;
            wc.contrib = Coeff::rational(scale) * c;
        } else {
            wc.scalar_series = Series::zero(hi);
        }
        if (!wc.contrib.is_zero()) res.contributing.push_back(w);
        res.total += wc.contrib;
        res.terms.push_back(std::move(wc));
    }
    res.total = apply_axioms(res.total, rel);
    res.square_integrable =
        !res.total.is_zero() && is_square_integrable(res.point, res.contributing);
    return res;
}

bool is_square_integrable(const Weight& point,
                          const std::vector<Weyl>& contributing) {
    for (Weyl w : contributing) {
        auto c = weight_simple_coords(weyl_act_weight(w, point));
        if (!(c[0].value() < 0 && c[1].value() < 0)) return false;
    }
    return !contributing.empty();
}

} // namespace mp4
