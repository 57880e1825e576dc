#include "mp4/lseries.hpp"

#include <algorithm>

namespace mp4 {

Series Series::zero(int hi, std::string var) {
    Series s;
    s.var = std::move(var);
    s.hi = hi;
    return s;
}

Series Series::constant(Coeff v, int hi, std::string var) {
    return term(0, std::move(v), hi, std::move(var));
}

Series Series::term(int power, Coeff v, int hi, std::string var) {
    Series s;
    s.var = std::move(var);
    s.hi = hi;
    if (power <= hi && !v.is_zero()) s.c[power] = std::move(v);
    return s;
}

int Series::leading_power() const {
    if (c.empty()) throw std::logic_error("zero series has no leading power");
    return c.begin()->first;
}

int Series::pole_order() const {
    if (c.empty()) return 0;
    return std::max(0, -leading_power());
}

Coeff Series::coeff(int power) const {
    if (power > hi)
        throw UnsupportedCase("series coefficient beyond truncation order");
    auto it = c.find(power);
    return it == c.end() ? Coeff() : it->second;
}

Series operator+(const Series& a, const Series& b) {
    if (a.var != b.var)
        throw std::logic_error("series variable mismatch: " + a.var + " vs " + b.var);
    Series r = Series::zero(std::min(a.hi, b.hi), a.var);
    for (const auto& [p, v] : a.c)
        if (p <= r.hi) r.c[p] = v;
    for (const auto& [p, v] : b.c) {
        if (p > r.hi) continue;
        Coeff& dst = r.c[p];
        dst += v;
        if (dst.is_zero()) r.c.erase(p);
    }
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::operator-() const {
    Series r = *this;
    for (auto& [p, v] : r.c) v = -v;
    return r;
}

Series operator*(const Series& a, const Series& b) {
    if (a.var != b.var)
        throw std::logic_error("series variable mismatch: " + a.var + " vs " + b.var);
    if (a.is_zero() || b.is_zero())
        return Series::zero(std::min(a.hi, b.hi), a.var);
    int la = a.leading_power(), lb = b.leading_power();
    Series r = Series::zero(std::min(a.hi + lb, b.hi + la), a.var);
    for (const auto& [pa, va] : a.c) {
        for (const auto& [pb, vb] : b.c) {
            int p = pa + pb;
            if (p > r.hi) continue;
            Coeff& dst = r.c[p];
            dst += va * vb;
            if (dst.is_zero()) r.c.erase(p);
        }
    }
    return r;
}

Series operator*(const Coeff& k, const Series& s) {
    Series r = Series::zero(s.hi, s.var);
    if (k.is_zero()) return r;
    for (const auto& [p, v] : s.c) {
        Coeff prod = k * v;
        if (!prod.is_zero()) r.c[p] = std::move(prod);
    }
    return r;
}

Series Series::inverse() const {
    if (is_zero()) throw UnsupportedCase("division by zero series");
    int m = leading_power();
    Coeff lead = c.begin()->second;
    if (!lead.is_unit())
        throw UnsupportedCase(
            "division by series with non-invertible leading coefficient: " +
            lead.str());
    Coeff lead_inv = lead.inverse();
    int n = hi - m; // number of trusted coefficients beyond the leading one
    // Invert 1 + r where r = sum_{k>=1} d_k u^k.
    std::vector<Coeff> d(n + 1), inv(n + 1);
    for (int k = 1; k <= n; ++k) d[k] = lead_inv * coeff(m + k);
    inv[0] = Coeff::one();
    for (int k = 1; k <= n; ++k) {
        Coeff acc;
        for (int j = 1; j <= k; ++j) acc += d[j] * inv[k - j];
        inv[k] = -acc;
    }
    Series r = Series::zero(-m + n, var);
    for (int k = 0; k <= n; ++k) {
        Coeff v = lead_inv * inv[k];
        if (!v.is_zero()) r.c[-m + k] = std::move(v);
    }
    return r;
}

std::string Series::str() const {
    std::string out;
    for (const auto& [p, v] : c) {
        std::string piece;
        if (v.terms.size() == 1) {
            piece = v.str_with_power(var, p);
        } else {
            piece = "(" + v.str() + ")";
            if (p > 0) piece += "*" + (p == 1 ? var : var + "^" + std::to_string(p));
            else if (p < 0)
                piece += "/" + (p == -1 ? var : var + "^" + std::to_string(-p));
        }
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    std::string order;
    int k = hi + 1;
    if (k == 0) order = "O(1)";
    else if (k == 1) order = "O(" + var + ")";
    else if (k > 1) order = "O(" + var + "^" + std::to_string(k) + ")";
    else order = "O(" + var + "^(" + std::to_string(k) + "))";
    if (out.empty()) return "0 + " + order;
    return out + " + " + order;
}

std::string LTerm::str() const {
    std::string head = kind == LKind::Eps ? "eps" : (chi.empty() ? "zeta" : "L");
    std::string out = head + "(" + arg.str();
    if (!chi.empty()) out += "," + char_str(chi);
    out += ")";
    return out;
}

Coeff zeta_coeff(int k) {
    std::string name = k == -1 ? "a-1" : "a" + std::to_string(k);
    symtab::declare(name, k == -1);
    return Coeff::symbol(name);
}

namespace {

Rat rat_pow(const Rat& b, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

// Unit-or-opaque expansion around a regular point p: base symbol plus fresh
// derivative symbols base@k scaled by b^k.
Series regular_expansion(const std::string& base, bool unit, const Rat& b,
                         int hi, const std::string& var) {
    symtab::declare(base, unit);
    Series s = Series::constant(Coeff::symbol(base), hi, var);
    if (b != 0) {
        for (int k = 1; k <= hi; ++k) {
            std::string name = base + "@" + std::to_string(k);
            symtab::declare(name, false);
            s = s + Series::term(k, rat_pow(b, k) * Coeff::symbol(name), hi, var);
        }
    }
    return s;
}

} // namespace

Series expand_eps(const Rat& a, const Rat& b, const CharacterExpr& chi,
                  const RelationSet& rel, int hi, const std::string& var) {
    CharacterExpr cr = rel.reduce(chi);
    if (cr.empty()) return Series::constant(Coeff::one(), hi, var);
    std::string base = "eps(" + rat_str(a) + "," + char_str(cr) + ")";
    return regular_expansion(base, true, b, hi, var);
}

Series expand_L(const Rat& a, const Rat& b, const CharacterExpr& chi,
                const RelationSet& rel, int hi, const std::string& var) {
    CharacterExpr cr = rel.reduce(chi);
    if (cr.empty()) {
        if (a == 1 || a == 0) {
            if (b == 0)
                throw UnsupportedCase("zeta evaluated at its pole " + rat_str(a));
            Rat slope = a == 1 ? b : -b;
            Series s = Series::term(-1, (Rat(1) / slope) * zeta_coeff(-1), hi, var);
            for (int k = 0; k <= hi; ++k) {
                Coeff v = rat_pow(slope, k) * zeta_coeff(k);
                s = s + Series::term(k, std::move(v), hi, var);
            }
            return s;
        }
        if (a < Rat(1, 2)) {
            // Functional equation with eps = 1 for the trivial character.
            return expand_L(1 - a, -b, cr, rel, hi, var);
        }
        return regular_expansion("zeta(" + rat_str(a) + ")", true, b, hi, var);
    }
    if (a < Rat(1, 2)) {
        // L(s,chi) = eps(s,chi) L(1-s,chi^-1)
        return expand_eps(a, b, cr, rel, hi, var) *
               expand_L(1 - a, -b, char_inv(cr), rel, hi, var);
    }
    bool unit = a >= 1; // edge nonvanishing axiom; critical strip is opaque
    std::string base = "L(" + rat_str(a) + "," + char_str(cr) + ")";
    return regular_expansion(base, unit, b, hi, var);
}

Series expand_lterm(const LTerm& t, const std::string& along_var, const Rat& at,
                    const RelationSet& rel, int hi, const std::string& var) {
    for (const auto& [v, q] : t.arg.terms)
        if (v != along_var)
            throw std::logic_error("argument depends on foreign variable " + v +
                                   ": " + t.arg.str());
    Rat a = t.arg.constant + t.arg.coeff(along_var) * at;
    Rat b = t.arg.coeff(along_var);
    if (t.kind == LKind::Eps) return expand_eps(a, b, t.chi, rel, hi, var);
    return expand_L(a, b, t.chi, rel, hi, var);
}

OrderInfo order_at_L(const Rat& point, const CharacterExpr& chi,
                     const RelationSet& rel) {
    CharacterExpr cr = rel.reduce(chi);
    if (cr.empty()) {
        if (point == 1 || point == 0) return {-1, true};
        return {0, true};
    }
    bool edge = point >= 1 || point <= 0;
    return {0, edge};
}

} // namespace mp4
