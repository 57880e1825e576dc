#pragma once

#include "mp4/characters.hpp"
#include "mp4/spectrum.hpp"

#include <string>
#include <vector>

namespace mp4 {

// One diagonal entry of an unramified Satake class for the metaplectic dual
// group Sp4(C): a character value at the uniformizer (kept as a formal
// symbol) times q^{-e}.
struct SatakeEntry {
    CharacterExpr chi;
    Rat e;
    auto operator<=>(const SatakeEntry&) const = default;
    std::string str() const; // "chi*q^1/2", "mu", "q^-3/2"
};

// Sorted 4-multiset, characters reduced under the relation set it was built
// with.
using Satake = std::vector<SatakeEntry>;

std::string satake_str(const Satake& s);

// Normalizes a pair list into a symplectically closed 4-multiset: appends
// the inverse pair of each given pair, reduces and sorts.
Satake satake_from_pairs(const std::vector<std::pair<CharacterExpr, Rat>>& pairs,
                         const RelationSet& rel);

bool symplectically_closed(const Satake& s, const RelationSet& rel);

enum class ParamType { Tempered, Soudry, SaitoKurokawa, HPS, Principal };

ParamType param_type_from_name(const std::string& name);
std::string param_type_name(ParamType t);

// Diagonal Satake 4-multiset of the parameter's localization. `chars` names
// the unramified character symbols of the constituents:
//   tempered / soudry / hps: {chi, mu}; saito_kurokawa: {chi, mu} with pi
//   unramified of Satake (mu, mu^-1); principal: {chi}.
Satake satake_of_param(ParamType t, const std::vector<std::string>& chars,
                       const RelationSet& rel);

// Satake multiset of a residual quotient: exponents from the evaluation
// point, characters from the inducing datum.
Satake satake_of_quotient(const ResidualPoint& rp,
                          const std::vector<std::string>& chars,
                          const RelationSet& rel);

// Near equivalence at an unramified place: equality of the diagonal
// multisets up to the signed-permutation (Weyl) action on the dual torus.
bool near_equivalent(const Satake& a, const Satake& b, const RelationSet& rel);

// The residual family matched by each parameter type (empty for tempered).
std::string matched_family(ParamType t);

} // namespace mp4
