#pragma once

#include "mp4/lseries.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mp4 {

// One rank-one factor of the intertwining coefficient: an L-ratio attached to
// a positive root, with the epsilon unit present only in normalizing factors.
struct GKFactor {
    RootId root;
    LTerm num, den;
    std::optional<LTerm> eps;
    auto operator<=>(const GKFactor&) const = default;
};

using GKProduct = std::vector<GKFactor>; // ordered by root id

// Product over the inversion set of w: short roots contribute
// L(<L,b^vee>,.)/L(<L,b^vee>+1,.), long roots double the argument and square
// the character.
GKProduct gk_product(Weyl w, const Weight& lambda, const TorusCharacter& tc,
                     const RelationSet& rel);

// Same with epsilon units attached to the denominators.
GKProduct normalizing_factor(Weyl w, const Weight& lambda,
                             const TorusCharacter& tc, const RelationSet& rel);

enum class Parabolic { Siegel, NonSiegel, Borel };

Parabolic parabolic_from_name(const std::string& name);
std::string parabolic_name(Parabolic p);

// Weyl set indexing the constant-term sum for each parabolic.
const std::vector<Weyl>& omega_set(Parabolic p);

std::vector<std::pair<Weyl, GKProduct>> constant_term(Parabolic p,
                                                      const Weight& lambda,
                                                      const TorusCharacter& tc,
                                                      const RelationSet& rel);

std::string gk_str(const GKProduct& p); // "1" for the empty product

} // namespace mp4
