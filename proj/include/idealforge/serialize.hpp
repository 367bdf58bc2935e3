#pragma once

#include "idealforge/circle_map.hpp"
#include "idealforge/inclusion.hpp"
#include "idealforge/orbit.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace idealforge {

/// {"breaks": [["p/2^k","q/2^l"], ...]} with dyadics as strings.
nlohmann::json element_to_json(const CircleHomeo& g);

/// Inverse of element_to_json; throws std::invalid_argument on malformed or
/// non-dyadic data. Accepts any valid raw lift and normalizes.
CircleHomeo element_from_json(const nlohmann::json& j);

/// ["p/2^k", i, j]
nlohmann::json marked_point_to_json(const MarkedPoint& p);

/// {"blocksA": [["label", dim], ...], "blocksB": [...], "M": [[...]],
///  "action": [[perm], ...] | null}; optional "name".
InclusionInstance instance_from_json(const nlohmann::json& j, const std::string& fallback_name);
nlohmann::json instance_to_json(const InclusionInstance& inst);

/// Named-element fixture files: {"A": {"breaks": ...}, ...}.
std::map<std::string, CircleHomeo> elements_from_json(const nlohmann::json& j);
nlohmann::json elements_to_json(const std::map<std::string, CircleHomeo>& elems);

}  // namespace idealforge
