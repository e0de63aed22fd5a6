#include "hlab/geom.hpp"

#include <algorithm>

#include "hlab/error.hpp"

namespace hlab {

int orientation(const Point& p, const Point& q, const Point& r) {
  return sgn(Scalar(cross(q - p, r - p)));
}

ConvexPolygon ConvexPolygon::from_ccw(std::vector<Point> vertices) {
  if (vertices.empty()) throw InputError("empty point set");
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) throw InputError("polygon has repeated vertices");
    }
  }
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      if (orientation(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) <= 0) {
        throw InputError("polygon not strictly convex and counter-clockwise");
      }
    }
    // Left turns everywhere still admit star polygons that wind more than
    // once. A convex cycle rises once and falls once in lexicographic order.
    int direction_changes = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool up_here = vertices[i] < vertices[(i + 1) % n];
      const bool up_next = vertices[(i + 1) % n] < vertices[(i + 2) % n];
      if (up_here != up_next) ++direction_changes;
    }
    if (direction_changes != 2) throw InputError("polygon not strictly convex and counter-clockwise");
  }
  const auto first = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), first, vertices.end());
  return ConvexPolygon(std::move(vertices));
}

std::vector<Segment> ConvexPolygon::edges() const {
  std::vector<Segment> out;
  if (vertices_.size() == 2) {
    out.push_back({vertices_[0], vertices_[1]});
  } else if (vertices_.size() >= 3) {
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back({vertices_[i], vertex(i + 1)});
  }
  return out;
}

ConvexPolygon convex_hull(std::span<const Point> points) {
  if (points.empty()) throw InputError("empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return ConvexPolygon(std::move(pts));

  // Andrew's monotone chain, collinear points popped.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  // All collinear: the chain degenerates to the two extremes.
  if (hull.size() == 2) return ConvexPolygon({pts.front(), pts.back()});
  return ConvexPolygon(std::move(hull));
}

namespace {

// p on the closed segment [a, b]
bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

Membership contains_point(const ConvexPolygon& polygon, const Point& x) {
  const auto& v = polygon.vertices();
  if (v.size() == 1) return v[0] == x ? Membership::boundary : Membership::outside;
  if (v.size() == 2) return on_segment(v[0], v[1], x) ? Membership::boundary : Membership::outside;
  bool on_edge = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int o = orientation(v[i], polygon.vertex(i + 1), x);
    if (o < 0) return Membership::outside;
    if (o == 0) on_edge = true;
  }
  return on_edge ? Membership::boundary : Membership::interior;
}

namespace {

std::optional<Segment> clip_to_solid(const Segment& s, const ConvexPolygon& polygon) {
  // Parametric clip of a + t(b - a), t in [0, 1], against each inner half-plane.
  Scalar lo = 0;
  Scalar hi = 1;
  const Point d = s.b - s.a;
  for (const Segment& e : polygon.edges()) {
    const Point dir = e.b - e.a;
    const Scalar c0 = cross(dir, s.a - e.a);
    const Scalar c1 = cross(dir, d);
    // c0 + t c1 >= 0
    if (c1 == 0) {
      if (c0 < 0) return std::nullopt;
    } else if (c1 > 0) {
      const Scalar t = -c0 / c1;
      if (t > lo) lo = t;
    } else {
      const Scalar t = -c0 / c1;
      if (t < hi) hi = t;
    }
    if (lo > hi) return std::nullopt;
  }
  return Segment{lerp(s.a, s.b, lo), lerp(s.a, s.b, hi)};
}

std::optional<Segment> clip_to_segment(const Segment& s, const Segment& t) {
  if (t.degenerate()) {
    if (s.degenerate()) return s.a == t.a ? std::optional(Segment{s.a, s.a}) : std::nullopt;
    return on_segment(s.a, s.b, t.a) ? std::optional(Segment{t.a, t.a}) : std::nullopt;
  }
  if (s.degenerate()) {
    return on_segment(t.a, t.b, s.a) ? std::optional(Segment{s.a, s.a}) : std::nullopt;
  }
  const Point d = s.b - s.a;
  const Point e = t.b - t.a;
  const Scalar denom = cross(d, e);
  if (denom != 0) {
    // s.a + u d = t.a + w e
    const Scalar u = cross(t.a - s.a, e) / denom;
    const Scalar w = cross(t.a - s.a, d) / denom;
    if (u < 0 || u > 1 || w < 0 || w > 1) return std::nullopt;
    const Point p = lerp(s.a, s.b, u);
    return Segment{p, p};
  }
  if (orientation(s.a, s.b, t.a) != 0) return std::nullopt;
  // Collinear: intersect parameter ranges along d.
  const Scalar dd = dot(d, d);
  Scalar w0 = dot(t.a - s.a, d) / dd;
  Scalar w1 = dot(t.b - s.a, d) / dd;
  if (w1 < w0) std::swap(w0, w1);
  const Scalar lo = std::max(Scalar(0), w0);
  const Scalar hi = std::min(Scalar(1), w1);
  if (lo > hi) return std::nullopt;
  return Segment{lerp(s.a, s.b, lo), lerp(s.a, s.b, hi)};
}

}  // namespace

std::optional<Segment> clip_segment(const Segment& s, const ConvexPolygon& polygon) {
  if (polygon.is_solid()) return clip_to_solid(s, polygon);
  const Point& a = polygon[0];
  const Point& b = polygon.is_segment() ? polygon[1] : polygon[0];
  return clip_to_segment(s, Segment{a, b});
}

ConvexPolygon to_polygon(const Segment& s) {
  const Point pts[2] = {s.a, s.b};
  return convex_hull(pts);
}

}  // namespace hlab
