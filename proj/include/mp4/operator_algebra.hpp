#pragma once

#include "mp4/characters.hpp"
#include "mp4/coeff.hpp"
#include "mp4/root_data.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mp4 {

// A normalized intertwining operator R(point, char, w) or one of its partial
// derivatives in the spectral plane. The character is stored reduced; text
// rendering follows the ambient-datum shorthand and omits it.
struct OpAtom {
    enum class Kind { R, Rx, Ry };
    Kind kind = Kind::R;
    Weight pt;
    TorusCharacter chr;
    Weyl w = Weyl::One;
    auto operator<=>(const OpAtom&) const = default;
    std::string str() const; // "R(a3/2,w212)", "Rx(-a3/2,w1)"
};

// Composition product, leftmost factor applied last (matching how the
// cocycle relation is written).
using OpProduct = std::vector<OpAtom>;

std::string op_product_str(const OpProduct& p); // "Id" for the empty product

struct OpSum {
    std::map<OpProduct, Coeff> terms;

    static OpSum zero() { return {}; }
    static OpSum identity();
    static OpSum atom(OpAtom a);

    bool is_zero() const { return terms.empty(); }
    OpSum& operator+=(const OpSum& o);
    friend OpSum operator+(OpSum a, const OpSum& b) { return a += b; }
    friend OpSum operator-(OpSum a, const OpSum& b);
    OpSum operator-() const;
    friend OpSum operator*(const OpSum& a, const OpSum& b); // a applied after b
    friend OpSum operator*(const Coeff& k, const OpSum& s);
    bool operator==(const OpSum&) const = default;
    std::string str() const; // "0" for the zero sum
};

// Polynomial truncation c0 + c1*u of an operator family; only orders 0 and 1
// are representable.
struct OpPoly {
    OpSum c0, c1;
    int order = 0;
    std::string str(const std::string& var = "u") const;
};

// Rank-one rewrite axioms, valid when the relation set entails that the
// factor's character chi(x)mu satisfies chi = mu and chi^2 = 1:
//   R(t*a3, w1) = id, R(t*a4, w2) = id, Ry(t*a3, w1) = 0.
struct AtomNF {
    bool zero = false;
    std::optional<OpAtom> atom; // empty (and !zero) means identity
};
AtomNF atom_normal_form(OpAtom a, const RelationSet& rel);

// Axiom application plus cocycle re-merging of adjacent compatible factors;
// idempotent.
OpSum apply_axioms(const OpSum& s, const RelationSet& rel);

// Rank-one factors of R(lambda, tc, w) along a reduced word (the canonical
// one unless given), in printed order.
OpProduct cocycle_split(const Weight& lambda, const TorusCharacter& tc, Weyl w,
                        const RelationSet& rel,
                        const std::vector<int>* word = nullptr);

// First-order Taylor expansion of the family R(base + u*velocity, tc, w),
// splitting off rank-one factors that the identity axiom turns into 1 + O(u)
// and transporting the velocity through the group action.
OpPoly taylor_expand(const Weight& base, const std::array<Rat, 2>& velocity,
                     const TorusCharacter& tc, Weyl w, int order,
                     const RelationSet& rel);

} // namespace mp4
