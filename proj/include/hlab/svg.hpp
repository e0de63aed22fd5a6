#pragma once

#include <string>
#include <vector>

#include "hlab/geom.hpp"

namespace hlab {

/// SVG 1.1 writer over exact world coordinates. Coordinates are mapped to
/// the page exactly and rounded only when printed (9 decimals,
/// round-half-even), so output is byte-stable.
class SvgDocument {
 public:
  /// World window [min, max] shown on a page `width` pixels wide, y up.
  SvgDocument(Point world_min, Point world_max, int width, std::string title);

  void polygon(const ConvexPolygon& polygon, const std::string& style);
  void polyline(const std::vector<Point>& points, const std::string& style);
  void text(const Point& at, const std::string& content, const std::string& style = "font-size:12px");

  std::string str() const;

 private:
  std::string page(const Point& p) const;

  Point min_;
  Point max_;
  Scalar scale_;
  Scalar margin_;
  Scalar width_;
  Scalar height_;
  std::string title_;
  std::vector<std::string> body_;
};

/// Bounding box of a set of polygons, padded by `pad` on every side.
std::pair<Point, Point> bounding_box(const std::vector<ConvexPolygon>& polygons, const Scalar& pad);

}  // namespace hlab
