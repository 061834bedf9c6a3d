#ifndef ARCMAP_DOMAIN_JSON_HPP
#define ARCMAP_DOMAIN_JSON_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "arcmap/geometry.hpp"

namespace arcmap {

/// JSON domain schema:
///   { "vertices":   [[re, im], ...],
///     "centers":    [[re, im] | null, ...],
///     "indicators": [int, ...] }
/// null centers mark straight segments (indicator 0).
ArcPolygon arc_polygon_from_json(const nlohmann::json& j);
nlohmann::json arc_polygon_to_json(const ArcPolygon& poly);

ArcPolygon load_arc_polygon(const std::string& path);

}  // namespace arcmap

#endif
