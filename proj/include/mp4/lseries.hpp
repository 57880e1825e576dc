#pragma once

#include "mp4/affine.hpp"
#include "mp4/characters.hpp"
#include "mp4/coeff.hpp"

#include <map>
#include <optional>
#include <string>

namespace mp4 {

// Truncated Laurent series in one local variable with Coeff coefficients.
// Coefficients are trusted through power `hi` inclusive.
struct Series {
    std::string var = "u";
    int hi = 0;
    std::map<int, Coeff> c; // nonzero coefficients only, powers <= hi

    static Series zero(int hi, std::string var = "u");
    static Series constant(Coeff v, int hi, std::string var = "u");
    static Series term(int power, Coeff v, int hi, std::string var = "u");

    bool is_zero() const { return c.empty(); }
    // Lowest power with nonzero coefficient; throws on the zero series.
    int leading_power() const;
    // Pole order: -leading_power when negative, else 0; 0 for the zero series.
    int pole_order() const;
    Coeff coeff(int power) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    Series operator-() const;
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Coeff& k, const Series& s);
    Series inverse() const; // leading coefficient must be a unit
    friend Series operator/(const Series& a, const Series& b) {
        return a * b.inverse();
    }
    bool operator==(const Series&) const = default;

    std::string str() const;
};

// A completed L-function or epsilon factor applied to an affine argument.
enum class LKind { L, Eps };

struct LTerm {
    LKind kind = LKind::L;
    AffineForm arg;
    CharacterExpr chi; // reduced under the active relation set
    auto operator<=>(const LTerm&) const = default;
    std::string str() const; // "zeta(y+1)", "L(y,chi^2)", "eps(y+1,chi^2)"
};

// Laurent expansion of L(a + b*u, chi) around u=0, trusted through power hi.
// chi is reduced under rel before any symbol naming. The L-functions are
// completed: for the trivial character there are simple poles at 1 and 0
// (via the functional equation with eps = 1); for nontrivial characters the
// function is entire, values at points >= 1 or <= 0 are invertible units and
// values inside (0,1) are opaque non-invertible constants.
Series expand_L(const Rat& a, const Rat& b, const CharacterExpr& chi,
                const RelationSet& rel, int hi, const std::string& var = "u");

// Same for the epsilon factor; identically 1 for the trivial character.
Series expand_eps(const Rat& a, const Rat& b, const CharacterExpr& chi,
                  const RelationSet& rel, int hi, const std::string& var = "u");

Series expand_lterm(const LTerm& t, const std::string& along_var, const Rat& at,
                    const RelationSet& rel, int hi, const std::string& var = "u");

struct OrderInfo {
    int order = 0;           // negative = pole order
    bool known_nonzero = true; // false for opaque critical-strip values
};
OrderInfo order_at_L(const Rat& point, const CharacterExpr& chi,
                     const RelationSet& rel);

// Fresh zeta Laurent coefficient symbol a_k ("a-1", "a0", "a1", ...).
Coeff zeta_coeff(int k);

} // namespace mp4
