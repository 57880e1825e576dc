#pragma once

#include "mp4/arthur.hpp"
#include "mp4/residue_engine.hpp"
#include "mp4/spectrum.hpp"

#include <string>
#include <vector>

namespace mp4 {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The eleven acceptance checks; each runs independently and catches its own
// exceptions into a FAIL detail.
std::vector<CheckResult> run_acceptance_suite();

// One "PASS/FAIL <id> <name>" line per check plus a summary line.
std::string acceptance_text(const std::vector<CheckResult>& results);

// Cancellation of the two deformation paths meeting at a3/2 under
// {chi=mu, chi^2=1}, plus the constant extracted from the surviving
// first-order operator term, compared against the two candidate closed forms.
struct ConstantReport {
    bool cancellation_zero = false;
    Coeff constant;
    std::string derived;         // rendered constant
    std::string matches;         // "a-1/2", "a-1^2/2", or "neither"
};
ConstantReport constant_report();

// Reference implementation of near equivalence: brute force over the eight
// signed permutations of the two-pair decomposition.
bool near_equivalent_bruteforce(const Satake& a, const Satake& b,
                                const RelationSet& rel);

} // namespace mp4
