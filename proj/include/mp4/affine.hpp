#pragma once

#include "mp4/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace mp4 {

// A rational affine form c + sum_i q_i * v_i in named indeterminates.
// Used for weight coordinates and L-function arguments that depend on
// spectral variables like s, t, z, x, y.
struct AffineForm {
    Rat constant;
    std::map<std::string, Rat> terms; // variable -> coefficient, no zero entries

    AffineForm() = default;
    AffineForm(Rat c) : constant(std::move(c)) {}
    AffineForm(long c) : constant(c) {}
    static AffineForm var(const std::string& name, Rat coeff = Rat(1)) {
        AffineForm f;
        if (coeff != 0) f.terms[name] = std::move(coeff);
        return f;
    }

    bool is_constant() const { return terms.empty(); }
    bool is_zero() const { return terms.empty() && constant == 0; }

    Rat coeff(const std::string& name) const {
        auto it = terms.find(name);
        return it == terms.end() ? Rat(0) : it->second;
    }

    // The constant value; throws if symbolic.
    const Rat& value() const {
        if (!terms.empty())
            throw std::runtime_error("affine form is not constant: " + str());
        return constant;
    }

    AffineForm& operator+=(const AffineForm& o) {
        constant += o.constant;
        for (const auto& [v, q] : o.terms) {
            Rat& c = terms[v];
            c += q;
            if (c == 0) terms.erase(v);
        }
        return *this;
    }
    AffineForm& operator-=(const AffineForm& o) { return *this += -o; }
    AffineForm operator-() const {
        AffineForm r;
        r.constant = -constant;
        for (const auto& [v, q] : terms) r.terms[v] = -q;
        return r;
    }
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(const Rat& q, const AffineForm& f) {
        AffineForm r;
        if (q == 0) return r;
        r.constant = q * f.constant;
        for (const auto& [v, c] : f.terms) r.terms[v] = q * c;
        return r;
    }
    friend AffineForm operator*(const AffineForm& f, const Rat& q) { return q * f; }

    // Substitute a value (or another form) for one variable.
    AffineForm subst(const std::string& name, const AffineForm& val) const {
        AffineForm r = *this;
        auto it = r.terms.find(name);
        if (it == r.terms.end()) return r;
        Rat c = it->second;
        r.terms.erase(it);
        r += c * val;
        return r;
    }

    auto operator<=>(const AffineForm&) const = default;

    std::string str() const {
        std::string out;
        bool first = true;
        for (const auto& [v, q] : terms) {
            std::string piece;
            Rat a = q < 0 ? Rat(-q) : q;
            if (a == 1) piece = v;
            else piece = rat_str(a) + "*" + v;
            if (first) {
                out += (q < 0 ? "-" : "") + piece;
                first = false;
            } else {
                out += (q < 0 ? "-" : "+") + piece;
            }
        }
        if (constant != 0 || first) {
            Rat a = constant < 0 ? Rat(-constant) : constant;
            if (first) out += rat_str(constant);
            else out += (constant < 0 ? "-" : "+") + rat_str(a);
        }
        return out;
    }
};

} // namespace mp4
