#pragma once

#include "k3walls/sd.hpp"
#include "k3walls/tower.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace k3walls {

using Json = nlohmann::ordered_json;

// Mukai vectors travel as {"r": int, "c": int, "f": int, "s": int}; every
// module and the CLI share this schema.
Json to_json(const MukaiVector& v);
MukaiVector mukai_vector_from_json(const Json& j);

// {"a": "p/q", "b": "p/q", "d": int} with decimal-free rational strings.
Json to_json(const QuadExt& x);
QuadExt quadext_from_json(const Json& j);

// {"type": "vertical"|"semicircle"|"empty"|"everywhere", "u0"|"center": ..., "radius_sq": ...}
Json to_json(const WallGeometry& g);
WallGeometry wall_geometry_from_json(const Json& j);

Json to_json(const WallQuadratic& q);
WallQuadratic wall_quadratic_from_json(const Json& j);

Json to_json(const WallClassification& c);
Json to_json(const TowerLevel& level, const TowerSpec& spec);
Json tower_to_json(const std::vector<TowerLevel>& levels, const TowerSpec& spec);
Json to_json(const ScanReport& report);
Json to_json(const HilbertChowScanReport& report);
Json to_json(const PersistenceReport& report);
Json to_json(const SDPair& pair);
Json to_json(const SDStatus& status);
Json to_json(const Eq9Solution& s);

std::string sd_sweep_csv(const std::vector<SDSweepRow>& rows);

/// Parses "r,alpha,beta,s" (the CLI vector syntax).
MukaiVector parse_mukai_vector(const std::string& text);
/// Parses "alpha,beta".
DivisorClass parse_divisor(const std::string& text);

}  // namespace k3walls
