#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "hlab/convex_ops.hpp"

namespace hlab {

inline void PrintTo(const Point& p, std::ostream* os) { *os << "(" << to_string(p.x) << ", " << to_string(p.y) << ")"; }

inline void PrintTo(const ConvexPolygon& polygon, std::ostream* os) {
  *os << "[";
  for (const Point& p : polygon.vertices()) PrintTo(p, os);
  *os << "]";
}

}  // namespace hlab

namespace hlab::testing {

inline ConvexPolygon poly(std::vector<Point> pts) { return convex_hull(pts); }

inline ConvexPolygon box(const Scalar& x0, const Scalar& y0, const Scalar& x1, const Scalar& y1) {
  return poly({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline ConvexPolygon unit_square() { return box(0, 0, 1, 1); }

/// Deterministic generator of rational geometry.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Rational in [lo, hi] with denominator at most max_den.
  Scalar scalar(long lo, long hi, long max_den = 16) {
    const long den = integer(1, max_den);
    return rational(integer(lo * den, hi * den), den);
  }

  Point point(long lo, long hi, long max_den = 16) { return {scalar(lo, hi, max_den), scalar(lo, hi, max_den)}; }

  /// Convex polygon with between min_v and max_v vertices.
  ConvexPolygon polygon(std::size_t min_v, std::size_t max_v, long lo = -4, long hi = 4, long max_den = 16) {
    for (;;) {
      std::vector<Point> pts;
      const long n = integer(static_cast<long>(min_v), static_cast<long>(max_v) + 4);
      for (long i = 0; i < n; ++i) pts.push_back(point(lo, hi, max_den));
      ConvexPolygon p = convex_hull(pts);
      if (p.size() >= min_v && p.size() <= max_v) return p;
    }
  }

  /// Random polygon anchored at a random offset, so pairs are sometimes
  /// apart and sometimes overlapping.
  ConvexPolygon placed_polygon(std::size_t min_v, std::size_t max_v, long spread) {
    const ConvexPolygon base = polygon(min_v, max_v, -2, 2);
    return translate(base, point(-spread, spread, 4));
  }

  /// Centrally symmetric hexagon ball.
  PolyhedralNorm hexagon_norm() {
    for (;;) {
      std::vector<Point> pts;
      for (int i = 0; i < 3; ++i) {
        const Point p = point(-3, 3, 4);
        pts.push_back(p);
        pts.push_back(-p);
      }
      ConvexPolygon ball = convex_hull(pts);
      if (ball.size() == 6 && contains_point(ball, {0, 0}) == Membership::interior) return make_norm(ball);
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Brute-force |x P| over lattice points of spacing `step` inside P (plus its
/// vertices). Returns the sampled minimum, which overestimates the true
/// distance by at most one cell diameter.
inline Scalar grid_point_distance(const Point& x, const ConvexPolygon& polygon, const PolyhedralNorm& norm,
                                  const Scalar& step) {
  Scalar min_x = polygon[0].x, max_x = min_x, min_y = polygon[0].y, max_y = min_y;
  for (const Point& v : polygon.vertices()) {
    if (v.x < min_x) min_x = v.x;
    if (v.x > max_x) max_x = v.x;
    if (v.y < min_y) min_y = v.y;
    if (v.y > max_y) max_y = v.y;
  }
  std::optional<Scalar> best;
  const auto consider = [&](const Point& g) {
    Scalar d = gauge(norm, x - g);
    if (!best || d < *best) best = std::move(d);
  };
  for (const Point& v : polygon.vertices()) consider(v);
  for (Scalar gx = min_x; gx <= max_x; gx += step) {
    for (Scalar gy = min_y; gy <= max_y; gy += step) {
      const Point g{gx, gy};
      if (contains_closed(polygon, g)) consider(g);
    }
  }
  return *best;
}

inline Scalar cell_diameter(const PolyhedralNorm& norm, const Scalar& step) {
  return std::max(gauge(norm, {step, step}), gauge(norm, {step, Scalar(-step)}));
}

}  // namespace hlab::testing
