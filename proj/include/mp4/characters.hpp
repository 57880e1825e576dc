#pragma once

#include "mp4/root_data.hpp"

#include <map>
#include <string>
#include <vector>

namespace mp4 {

// Formal product of abstract unitary character symbols with integer
// exponents. The trivial character is the empty map.
using CharacterExpr = std::map<std::string, int>;

CharacterExpr char_of(const std::string& symbol, int exp = 1);
CharacterExpr char_mul(const CharacterExpr& a, const CharacterExpr& b);
CharacterExpr char_pow(const CharacterExpr& a, int n);
CharacterExpr char_inv(const CharacterExpr& a);
std::string char_str(const CharacterExpr& e); // "1", "chi*mu^-1", "chi^2"

// Multiplicative relations "expr = 1" reduced through a Hermite normal form
// of the exponent lattice, plus side constraints "expr != 1" that are
// consulted but never used for rewriting.
class RelationSet {
public:
    RelationSet() = default;
    RelationSet(std::vector<CharacterExpr> relations,
                std::vector<CharacterExpr> inequations);

    // Comma separated constraints: ident '^' int '=' '1' | ident '=' ident |
    // ident '!=' ident. An empty string gives the free relation set.
    static RelationSet parse(const std::string& src);

    CharacterExpr reduce(const CharacterExpr& e) const;
    bool is_trivial(const CharacterExpr& e) const;
    // True when some declared inequation pins e (or its inverse) to a class
    // that is known to be nontrivial.
    bool declared_nontrivial(const CharacterExpr& e) const;

    const std::vector<CharacterExpr>& relations() const { return relations_; }
    const std::vector<CharacterExpr>& inequations() const { return inequations_; }
    std::string str() const;

private:
    std::vector<CharacterExpr> relations_;
    std::vector<CharacterExpr> inequations_;
    std::vector<std::string> symbols_;
    std::vector<std::vector<long>> basis_; // Hermite normal form rows
    void build();
};

struct TorusCharacter {
    CharacterExpr first;  // character of the coordinate a
    CharacterExpr second; // character of the coordinate b
    auto operator<=>(const TorusCharacter&) const = default;
    std::string str() const; // "chi(x)mu"
};

// Composition of the torus character with the coroot cocharacter of r.
CharacterExpr char_on_coroot(const TorusCharacter& tc, RootId r);

// Character transport along the torus conjugation of w.
TorusCharacter weyl_act_char(Weyl w, const TorusCharacter& tc);

} // namespace mp4
