#pragma once

#include <string>

#include "json.hpp"
#include "hlab/scenarios.hpp"

namespace hlab {

/// Scalar from a JSON string "p/q" / "p" or a JSON integer. Floats are rejected.
Scalar scalar_from_json(const nlohmann::json& value, const std::string& key);
nlohmann::json to_json(const Scalar& value);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const ConvexPolygon& polygon);
nlohmann::json to_json(const Segment& s);

/// Accepts a convex vertex list in either orientation, with collinear or
/// repeated points; anything not tracing a convex boundary exactly once is
/// rejected.
ConvexPolygon polygon_from_json(const nlohmann::json& value, const std::string& key);

Scene scene_from_json(const nlohmann::json& doc);
nlohmann::json scene_to_json(const Scene& scene);

/// Throws InputError naming the file or offending key.
Scene load_scene_file(const std::string& path);

/// Pretty-printed JSON followed by a newline.
std::string dump(const nlohmann::json& doc);

}  // namespace hlab
