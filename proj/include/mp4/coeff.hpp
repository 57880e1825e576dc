#pragma once

#include "mp4/rational.hpp"

#include <map>
#include <string>

namespace mp4 {

// Session-wide registry deciding which formal symbols may be inverted.
// Invertible symbols are units (nonzero residues, nonvanishing L-values,
// epsilon factors); everything else (a0, a1, ..., derivative coefficients,
// opaque critical-strip values) only ever appears with nonnegative exponents
// in denominators-free positions.
namespace symtab {
void declare(const std::string& name, bool invertible);
bool invertible(const std::string& name);
} // namespace symtab

using Monomial = std::map<std::string, int>;

std::string monomial_str(const Monomial& m);

// Exact rational function over Q in the declared formal symbols, stored as a
// sum of monomials with rational coefficients. Negative exponents are
// restricted to invertible symbols.
struct Coeff {
    std::map<Monomial, Rat> terms;

    Coeff() = default;
    static Coeff rational(Rat q);
    static Coeff one() { return rational(Rat(1)); }
    static Coeff symbol(const std::string& name, int exp = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_rational() const;
    // Single monomial whose symbols are all invertible.
    bool is_unit() const;
    Coeff inverse() const; // requires is_unit

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff operator-() const;
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    friend Coeff operator*(const Rat& q, const Coeff& c);
    friend Coeff operator/(const Coeff& a, const Coeff& b) {
        return a * b.inverse();
    }
    bool operator==(const Coeff&) const = default;

    std::string str() const;
    // Renders the term list with an extra power of `var` folded in, matching
    // the series display style ("a-1^2/(2*u^2)").
    std::string str_with_power(const std::string& var, int power) const;
};

} // namespace mp4
