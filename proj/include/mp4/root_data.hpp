#pragma once

#include "mp4/affine.hpp"

#include <array>
#include <string>
#include <vector>

namespace mp4 {

// The eight Weyl elements of type C2, named by their canonical reduced word.
// w12 means w1 composed with w2 (w2 applied first).
enum class Weyl { One, W1, W2, W12, W21, W121, W212, W1212 };

constexpr std::array<Weyl, 8> all_weyl = {Weyl::One,  Weyl::W1,   Weyl::W2,
                                          Weyl::W12,  Weyl::W21,  Weyl::W121,
                                          Weyl::W212, Weyl::W1212};

enum class RootId { A1, A2, A3, A4 };

constexpr std::array<RootId, 4> all_roots = {RootId::A1, RootId::A2, RootId::A3,
                                             RootId::A4};

struct SignedRoot {
    RootId id;
    bool negative = false;
    auto operator<=>(const SignedRoot&) const = default;
};

// Simple roots: a1 = e1 - e2 (short), a2 = 2 e2 (long); then a3 = a1 + a2 and
// a4 = 2 a1 + a2.
bool is_short(RootId r);
// (e1, e2) coordinates of the root and of its coroot.
std::array<Rat, 2> root_e(RootId r);
std::array<Rat, 2> coroot_e(RootId r);
// Coefficients of (a1, a2) for the root itself.
std::array<Rat, 2> root_simple_coords(RootId r);

std::string root_name(RootId r);
std::string root_name(SignedRoot r);
std::string weyl_name(Weyl w);
Weyl weyl_from_name(const std::string& name);

// A point (or symbolic family) Lambda = x * a1/2 + y * a3/2.
struct Weight {
    AffineForm x, y;
    Weight() = default;
    Weight(AffineForm x_, AffineForm y_) : x(std::move(x_)), y(std::move(y_)) {}
    bool is_constant() const { return x.is_constant() && y.is_constant(); }
    auto operator<=>(const Weight&) const = default;
    std::string str() const;
};

// Basis weights: the four positive roots, and the fundamental weights
// b1 = a4/2, b2 = a3.
Weight basis_weight(const std::string& name);

std::array<AffineForm, 2> weight_e_coords(const Weight& v);
Weight weight_from_e(const AffineForm& e1, const AffineForm& e2);
// Coefficients (c1, c2) with v = c1 * a1 + c2 * a2.
std::array<AffineForm, 2> weight_simple_coords(const Weight& v);

int weyl_length(Weyl w);
const std::vector<int>& weyl_word(Weyl w); // letters 1 and 2, leftmost applied last
std::vector<std::vector<int>> reduced_words(Weyl w);
Weyl weyl_mul(Weyl a, Weyl b); // a after b
Weyl weyl_inverse(Weyl w);
Weyl weyl_from_word(const std::vector<int>& word);

SignedRoot weyl_act_root(Weyl w, SignedRoot r);
Weight weyl_act_weight(Weyl w, const Weight& v);

// Coroot pairing <v, r^vee>. Negative roots flip the sign.
AffineForm pairing(const Weight& v, SignedRoot r);

std::vector<RootId> inversion_set(Weyl w);

// Conjugation action on the torus: for each output slot, which input
// coordinate feeds it and with which exponent. slot 0 reads t(a,b)'s "a",
// slot 1 reads "b".
struct TorusConj {
    std::array<int, 2> src;
    std::array<int, 2> exp; // +1 or -1
    auto operator<=>(const TorusConj&) const = default;
    std::string str() const; // e.g. "t(b,a^-1)"
};
TorusConj torus_conj(Weyl w);

} // namespace mp4
