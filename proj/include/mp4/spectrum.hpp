#pragma once

#include "mp4/residue_engine.hpp"

#include <string>
#include <vector>

namespace mp4 {

struct SiegelDatum {
    bool self_dual = false;
    bool central_character_nontrivial_quadratic = false;
};

// Inducing datum chi |.|^s (x) sigma on the non-Siegel parabolic. sigma is
// either an elementary theta representation attached to a quadratic eta, or
// a cuspidal Mp2 representation pi with a declared central L-value fact.
struct NonSiegelDatum {
    enum class SigmaType { ETF, Lpi };
    SigmaType type = SigmaType::ETF;
    RelationSet rel; // over {chi, eta}
    // ETF flags
    bool S_sigma_nonempty_even = true;
    bool chi_ne_eta_on_S_sigma = false;
    // Lpi flag
    bool central_value_nonzero = false;
};

struct BorelDatum {
    RelationSet rel; // over {chi, mu}
};

struct ResidualPoint {
    Weight point;
    std::string conditions;
    std::string quotient_label;
    bool square_integrable = false;
    std::string source; // parabolic id
    // Weyl exponents contributing to the constant term of the residue.
    std::vector<Weyl> contributing;
};

struct PoleInfo {
    Rat s;
    std::string condition;
    int order = 0;    // net order after declared adjustments; > 0 means pole
    std::string note; // e.g. why a candidate point drops out
};

// Pole bookkeeping for the degenerate (single s variable) Eisenstein
// coefficients, combining the L-argument orders with the datum's declared
// analytic facts.
std::vector<PoleInfo> siegel_pole_scan(const SiegelDatum& d);
std::vector<PoleInfo> nonsiegel_pole_scan(const NonSiegelDatum& d);

std::vector<ResidualPoint> classify_siegel(const SiegelDatum& d);
std::vector<ResidualPoint> classify_nonsiegel(const NonSiegelDatum& d);
// Drives the residue engine over all preset paths; no independent case table.
std::vector<ResidualPoint> classify_borel(const BorelDatum& d);

} // namespace mp4
