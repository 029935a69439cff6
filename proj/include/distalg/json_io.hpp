#pragma once

#include <string>

#include <json.hpp>

#include "distalg/adist.hpp"
#include "distalg/mset.hpp"

namespace distalg {

/// {"breakpoints": ["0", ...],
///  "pieces": [["1", "1/2+1/2*sqrt2", ...], ...],
///  "deltas": {"1/2": ["0", "2"], ...}}
/// Rationals and scalars are canonical strings; pieces are dense
/// coefficient arrays, lowest degree first. Round-trips bit-exactly.
nlohmann::json to_json(const ADist& f);
ADist adist_from_json(const nlohmann::json& j);

/// {"intervals": [{"lo": "0", "hi": "1", "lo_closed": true, "hi_closed": false}],
///  "add": ["2"], "remove": []}
/// Infinite endpoints are the strings "-inf" / "inf".
nlohmann::json to_json(const MSet& m);
MSet mset_from_json(const nlohmann::json& j);

std::string dump_canonical(const nlohmann::json& j);

} // namespace distalg
