#pragma once

// JSON and CSV encodings of results. Rationals travel as strings ("289/2")
// with a decimal rendering alongside, so nothing is rounded on the way out.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "riders/arrangement.hpp"
#include "riders/bounds.hpp"
#include "riders/oracle.hpp"

namespace riders {

using Json = nlohmann::ordered_json;

Json to_json(const BoundsReport& report);
Json table_json(const std::vector<BoundsReport>& table, unsigned q_max, unsigned r_max);
/// Columns: q,r,t_lower,t_upper,upper_applicable,external_reference
std::string table_csv(const std::vector<BoundsReport>& table);

/// Census fields without timing: q, r, moveset, chamber_count, type_count,
/// t_lower, t_upper, sandwich, freeness_violations, external_reference.
Json census_json(const TypeCensus& census, const SandwichReport& sandwich);

Json to_json(const Point& p);
Json placement_json(const Placement& placement);
/// Parses [["0","0"],["3/2","7"]]. Throws InvalidArgument on malformed input.
Placement parse_placement_json(std::string_view text);

Json profile_json(const ExtensionProfile& profile);
Json to_json(const SpaceAudit& audit);
Json to_json(const RecordingAudit& audit);

/// One canonical signature per line.
std::string signature_lines(const std::vector<Signature>& signatures);

}  // namespace riders
