#include "hlab/scene_io.hpp"

#include <fstream>
#include <sstream>

#include "hlab/error.hpp"

namespace hlab {

using nlohmann::json;

Scalar scalar_from_json(const json& value, const std::string& key) {
  if (value.is_string()) {
    try {
      return parse_scalar(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("key \"" + key + "\": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Scalar(mpz_class(value.get<unsigned long>()))
                                      : Scalar(mpz_class(value.get<long>()));
  }
  if (value.is_number_float()) throw InputError("key \"" + key + "\": decimal floats are not allowed, use \"p/q\"");
  throw InputError("key \"" + key + "\": expected a rational string \"p/q\"");
}

json to_json(const Scalar& value) { return to_string(value); }

json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const ConvexPolygon& polygon) {
  json out = json::array();
  for (const Point& p : polygon.vertices()) out.push_back(to_json(p));
  return out;
}

json to_json(const Segment& s) { return json::array({to_json(s.a), to_json(s.b)}); }

namespace {

Point point_from_json(const json& value, const std::string& key) {
  if (!value.is_array() || value.size() != 2) throw InputError("key \"" + key + "\": a point is [x, y]");
  return {scalar_from_json(value[0], key), scalar_from_json(value[1], key)};
}

// Position along the CCW boundary of a solid polygon: (edge index, fraction).
std::pair<std::size_t, Scalar> boundary_position(const ConvexPolygon& hull, const Point& p) {
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point d = hull.vertex(i + 1) - a;
    if (orientation(a, hull.vertex(i + 1), p) != 0) continue;
    Scalar t = dot(p - a, d) / dot(d, d);
    if (t >= 0 && t < 1) return {i, std::move(t)};
  }
  throw std::logic_error("boundary_position: point not on boundary");
}

}  // namespace

ConvexPolygon polygon_from_json(const json& value, const std::string& key) {
  if (!value.is_array() || value.empty()) throw InputError("key \"" + key + "\": expected a non-empty list of points");
  std::vector<Point> pts;
  pts.reserve(value.size());
  for (const json& item : value) pts.push_back(point_from_json(item, key));

  ConvexPolygon hull = convex_hull(pts);
  if (!hull.is_solid()) return hull;

  const auto not_convex = [&] { return InputError("key \"" + key + "\": polygon is not convex"); };
  std::vector<std::pair<std::size_t, Scalar>> positions;
  for (const Point& p : pts) {
    if (contains_point(hull, p) != Membership::boundary) throw not_convex();
    auto pos = boundary_position(hull, p);
    if (positions.empty() || positions.back() != pos) positions.push_back(std::move(pos));
  }
  if (positions.size() > 1 && positions.front() == positions.back()) positions.pop_back();
  // One lap around the boundary, in either direction.
  std::size_t rises = 0;
  std::size_t falls = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < positions[(i + 1) % positions.size()]) {
      ++rises;
    } else {
      ++falls;
    }
  }
  if (rises != 1 && falls != 1) throw not_convex();
  return hull;
}

Scene scene_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("scene must be a JSON object");
  const auto require = [&](const char* key) -> const json& {
    if (!doc.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
    return doc.at(key);
  };

  NormSpec norm;
  const json& n = require("norm");
  if (!n.is_object() || !n.contains("kind") || !n.at("kind").is_string()) {
    throw InputError("key \"norm\": expected {\"kind\": ...}");
  }
  const std::string kind = n.at("kind").get<std::string>();
  if (kind == "linf") {
    norm.kind = NormSpec::Kind::linf;
  } else if (kind == "l1") {
    norm.kind = NormSpec::Kind::l1;
  } else if (kind == "ball") {
    norm.kind = NormSpec::Kind::ball;
    if (!n.contains("ball")) throw InputError("key \"norm.ball\": missing");
    norm.ball = polygon_from_json(n.at("ball"), "norm.ball");
    try {
      make_norm(*norm.ball);
    } catch (const InputError& e) {
      throw InputError(std::string("key \"norm.ball\": ") + e.what());
    }
  } else if (kind == "euclidean_approx") {
    norm.kind = NormSpec::Kind::euclidean_approx;
    if (!n.contains("k") || !n.at("k").is_number_integer()) throw InputError("key \"norm.k\": expected an integer");
    norm.k = n.at("k").get<int>();
    if (norm.k < 3) throw InputError("key \"norm.k\": k too small");
  } else {
    throw InputError("key \"norm.kind\": unknown norm \"" + kind + "\"");
  }

  ConvexPolygon a = polygon_from_json(require("A"), "A");
  const json& b = require("B");
  if (!b.is_array() || b.empty()) throw InputError("key \"B\": expected a non-empty list of parts");
  std::vector<ConvexPolygon> parts;
  for (std::size_t i = 0; i < b.size(); ++i) parts.push_back(polygon_from_json(b[i], "B[" + std::to_string(i) + "]"));

  Scene scene{std::move(norm), std::move(a), std::move(parts), std::nullopt, std::nullopt, std::nullopt, ""};
  if (doc.contains("r")) scene.r = scalar_from_json(doc.at("r"), "r");
  if (doc.contains("epsilon")) scene.epsilon = scalar_from_json(doc.at("epsilon"), "epsilon");
  if (doc.contains("r_range")) {
    const json& range = doc.at("r_range");
    if (!range.is_array() || range.size() != 2) throw InputError("key \"r_range\": expected [lo, hi]");
    Scalar lo = scalar_from_json(range[0], "r_range");
    Scalar hi = scalar_from_json(range[1], "r_range");
    if (hi < lo) throw InputError("key \"r_range\": lo exceeds hi");
    scene.r_range = std::pair{std::move(lo), std::move(hi)};
  }
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw InputError("key \"label\": expected a string");
    scene.label = doc.at("label").get<std::string>();
  }
  return scene;
}

json scene_to_json(const Scene& scene) {
  json doc;
  json norm;
  switch (scene.norm.kind) {
    case NormSpec::Kind::linf:
      norm["kind"] = "linf";
      break;
    case NormSpec::Kind::l1:
      norm["kind"] = "l1";
      break;
    case NormSpec::Kind::ball:
      norm["kind"] = "ball";
      norm["ball"] = to_json(*scene.norm.ball);
      break;
    case NormSpec::Kind::euclidean_approx:
      norm["kind"] = "euclidean_approx";
      norm["k"] = scene.norm.k;
      break;
  }
  doc["norm"] = std::move(norm);
  doc["A"] = to_json(scene.a);
  json parts = json::array();
  for (const ConvexPolygon& part : scene.b_parts) parts.push_back(to_json(part));
  doc["B"] = std::move(parts);
  if (scene.r) doc["r"] = to_json(*scene.r);
  if (scene.epsilon) doc["epsilon"] = to_json(*scene.epsilon);
  if (scene.r_range) doc["r_range"] = json::array({to_json(scene.r_range->first), to_json(scene.r_range->second)});
  if (!scene.label.empty()) doc["label"] = scene.label;
  return doc;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scene file \"" + path + "\"");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in \"" + path + "\": " + e.what());
  }
  return scene_from_json(doc);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hlab
