#pragma once

// JSON and text forms for decompositions, reports and foldings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "hnfold/decomposition.hpp"
#include "hnfold/intersection.hpp"

namespace hnfold {

void to_json(nlohmann::json& j, const Trail& t);
void from_json(const nlohmann::json& j, Trail& t);
void to_json(nlohmann::json& j, const TrailDecomposition& d);
void from_json(const nlohmann::json& j, TrailDecomposition& d);
void to_json(nlohmann::json& j, const SourceSinkReport& r);
void from_json(const nlohmann::json& j, SourceSinkReport& r);
void to_json(nlohmann::json& j, const HncReport& r);
void from_json(const nlohmann::json& j, HncReport& r);

/// "base N" then one line of space-separated edge ids per trail.
std::string decomposition_text(const TrailDecomposition& d);
/// Throws ParseError.
TrailDecomposition parse_decomposition_text(std::string_view text);

nlohmann::json folding_json(const Folding& f);
nlohmann::json degree_profile_json(const Folding& f);

/// Rank, degree profile, 3-balance, sources and sinks, strong connectivity
/// and majority type. Class-based fields are null unless the rank is 2.
nlohmann::json analysis_json(const Folding& f);

}  // namespace hnfold
