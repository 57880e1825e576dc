#pragma once

#include "mp4/arthur.hpp"
#include "mp4/gk.hpp"
#include "mp4/residue_engine.hpp"
#include "mp4/spectrum.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mp4::report {

// ordered_json keeps insertion order, so identical queries emit identical
// bytes.
using Json = nlohmann::ordered_json;

Json table_json();
std::string table_text();

Json series_json(const Series& s);

Json gk_json(const GKProduct& p);
Json constant_term_json(Parabolic par,
                        const std::vector<std::pair<Weyl, GKProduct>>& ct);
std::string constant_term_text(
    Parabolic par, const std::vector<std::pair<Weyl, GKProduct>>& ct);

Json opsum_json(const OpSum& s);
Json residue_json(const ResidueResult& r);
std::string residue_text(const ResidueResult& r);

Json spectrum_json(const std::vector<ResidualPoint>& pts);
std::string spectrum_text(const std::vector<ResidualPoint>& pts);

Json satake_json(const Satake& s);

} // namespace mp4::report
