#pragma once

#include "mp4/gk.hpp"
#include "mp4/operator_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mp4 {

enum class HyperplaneId { S1, S2, S3, S4 };

std::string hyperplane_name(HyperplaneId h);
// Root attached to the singular hyperplane and its defining equation in (x,y).
RootId hyperplane_root(HyperplaneId h);
std::string hyperplane_equation(HyperplaneId h);

// Parametrization Lambda(u, along) of a tubular neighbourhood of the
// hyperplane: u is the transverse local variable, `along` the coordinate
// along the hyperplane. The jacobian rescales residues to the (x,y)
// normalization (2 for the (t,z) frame).
struct Frame {
    HyperplaneId h = HyperplaneId::S1;
    std::string name;  // "xy" or "tz"
    std::string along; // "y", "z", "x"
    Weight lambda;     // coordinates affine in {"u", along}
    Rat jacobian = 1;
};

Frame hyperplane_frame(HyperplaneId h, const std::string& frame_name);

// First-stage residue along the hyperplane for one Weyl term: the transverse
// Laurent data is integrated out, the factors that stay finite are kept
// symbolic in the along-coordinate.
struct HypTerm {
    Weyl w = Weyl::One;
    Coeff scalar;
    std::vector<LTerm> nums, dens, epses;
    std::string str(const std::string& op_label) const;
};

std::optional<HypTerm> residue_along(const Frame& fr, Weyl w,
                                     const TorusCharacter& tc,
                                     const RelationSet& rel);

struct ResiduePath {
    std::string name; // e.g. "S1:y=2"
    Frame frame;
    Rat at;             // value of the along-coordinate at the second stage
    Rat multiplicity{1}; // 1, or 1/2 for boundary-point deformations
};

const std::vector<ResiduePath>& preset_paths();
ResiduePath preset_path(const std::string& name);

struct WeylContribution {
    Weyl w = Weyl::One;
    std::optional<HypTerm> along; // empty when there is no first-stage pole
    Series scalar_series;         // second-stage Laurent data
    OpPoly op;
    OpSum contrib;
};

struct ResidueResult {
    std::string path;
    Weight point;
    OpSum total;
    std::vector<WeylContribution> terms;
    std::vector<Weyl> contributing;
    bool square_integrable = false;
};

ResidueResult iterated_residue(const ResiduePath& path,
                               const TorusCharacter& tc,
                               const RelationSet& rel);

// Langlands criterion: all exponents w(point) lie strictly inside the
// negative simple-root cone.
bool is_square_integrable(const Weight& point,
                          const std::vector<Weyl>& contributing);

} // namespace mp4
