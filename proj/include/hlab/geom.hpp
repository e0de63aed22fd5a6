#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "hlab/scalar.hpp"

namespace hlab {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  /// Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(const Point& a) { return {-a.x, -a.y}; }
inline Point operator*(const Scalar& t, const Point& a) { return {t * a.x, t * a.y}; }

inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// (1 - t) a + t b
inline Point lerp(const Point& a, const Point& b, const Scalar& t) { return a + t * (b - a); }

/// Closed segment [a, b]; a == b is allowed.
struct Segment {
  Point a;
  Point b;

  bool degenerate() const { return a == b; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Sign of (q - p) x (r - p): +1 counter-clockwise, 0 collinear, -1 clockwise.
int orientation(const Point& p, const Point& q, const Point& r);

/// Convex compact in the plane. Vertices are strictly convex, counter-clockwise
/// and start at the lexicographically smallest vertex. One vertex is a point,
/// two vertices a segment.
class ConvexPolygon {
 public:
  /// Validates a vertex list that is already in canonical form up to rotation:
  /// distinct, strictly convex, CCW. Throws InputError otherwise.
  static ConvexPolygon from_ccw(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  /// i-th vertex with cyclic indexing.
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }
  bool is_solid() const { return vertices_.size() >= 3; }

  /// Boundary edges in CCW order. A segment yields one edge, a point none.
  std::vector<Segment> edges() const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  explicit ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}
  friend ConvexPolygon convex_hull(std::span<const Point> points);

  std::vector<Point> vertices_;
};

enum class Membership { interior, boundary, outside };

/// Minimal CCW hull; collinear and duplicate points dropped. Throws
/// InputError("empty point set") on empty input.
ConvexPolygon convex_hull(std::span<const Point> points);

/// Exact three-way classification. Lower-dimensional polygons have no
/// interior: their points classify as boundary.
Membership contains_point(const ConvexPolygon& polygon, const Point& x);

inline bool contains_closed(const ConvexPolygon& polygon, const Point& x) {
  return contains_point(polygon, x) != Membership::outside;
}

/// s ∩ polygon as a (possibly degenerate) segment; nullopt when disjoint.
std::optional<Segment> clip_segment(const Segment& s, const ConvexPolygon& polygon);

/// Segment as a polygon (point if degenerate).
ConvexPolygon to_polygon(const Segment& s);

}  // namespace hlab
