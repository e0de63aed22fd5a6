#include "hlab/norm.hpp"

#include <algorithm>

#include "hlab/error.hpp"

namespace hlab {

PolyhedralNorm make_norm(ConvexPolygon ball) {
  const auto& v = ball.vertices();
  for (const Point& p : v) {
    if (std::find(v.begin(), v.end(), -p) == v.end()) throw InputError("ball not centrally symmetric");
  }
  if (contains_point(ball, Point{0, 0}) != Membership::interior) throw InputError("origin not interior");

  std::vector<Point> dual;
  dual.reserve(v.size());
  for (const Segment& e : ball.edges()) {
    const Point d = e.b - e.a;
    const Point normal{d.y, -d.x};
    const Scalar offset = dot(normal, e.a);  // > 0, origin is interior
    dual.push_back({normal.x / offset, normal.y / offset});
  }
  return PolyhedralNorm(std::move(ball), std::move(dual));
}

Scalar PolyhedralNorm::operator()(const Point& v) const {
  Scalar best = dot(dual_.front(), v);
  for (std::size_t i = 1; i < dual_.size(); ++i) {
    Scalar value = dot(dual_[i], v);
    if (value > best) best = std::move(value);
  }
  return best;
}

Scalar gauge(const PolyhedralNorm& norm, const Point& v) { return norm(v); }

PolyhedralNorm linf_norm() {
  return make_norm(ConvexPolygon::from_ccw({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
}

PolyhedralNorm l1_norm() {
  return make_norm(ConvexPolygon::from_ccw({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}));
}

Scalar support(const ConvexPolygon& polygon, const Point& u) {
  if (u.x == 0 && u.y == 0) throw InputError("zero direction");
  Scalar best = dot(polygon[0], u);
  for (std::size_t i = 1; i < polygon.size(); ++i) {
    Scalar value = dot(polygon[i], u);
    if (value > best) best = std::move(value);
  }
  return best;
}

namespace {

// Point on the unit circle at parameter t: ((1 - t^2), 2t) / (1 + t^2).
Point circle_point(const Scalar& t) {
  const Scalar t2 = t * t;
  const Scalar den = 1 + t2;
  return {(1 - t2) / den, 2 * t / den};
}

// Smallest m / 10^7 with (m / 10^7)^2 >= value, value >= 1.
Scalar sqrt_upper(const Scalar& value) {
  const mpz_class scale = 10'000'000;
  mpz_class lo = scale;  // (lo/scale)^2 <= value
  mpz_class hi = scale;
  while (Scalar(hi * hi, scale * scale) < value) hi *= 2;
  while (hi - lo > 1) {
    const mpz_class mid = (lo + hi) / 2;
    if (Scalar(mid * mid, scale * scale) >= value) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Scalar out(hi, scale);
  out.canonicalize();
  return out;
}

}  // namespace

NormSandwich euclidean_approx(int k) {
  if (k < 3) throw InputError("k too small");
  // k parameters equally spread over [-1, 1) cover the right half circle,
  // their negations the left half; the spread is centred on t = 0 so that
  // (1, 0) and (-1, 0) are always vertices.
  std::vector<Point> pts;
  pts.reserve(2 * static_cast<std::size_t>(k));
  const int lo = -(k / 2);
  for (int j = lo; j < lo + k; ++j) {
    const Point p = circle_point(rational(2 * j, k));
    pts.push_back(p);
    pts.push_back(-p);
  }
  ConvexPolygon inner_ball = convex_hull(pts);

  // Each edge [a, b] sits at Euclidean distance cross(a, b) / |b - a| from
  // the origin; scaling by s covers the disc iff s^2 >= |b - a|^2 / cross^2.
  Scalar worst = 1;
  for (const Segment& e : inner_ball.edges()) {
    const Point d = e.b - e.a;
    const Scalar c = cross(e.a, e.b);
    Scalar need = dot(d, d) / (c * c);
    if (need > worst) worst = std::move(need);
  }
  Scalar ratio = sqrt_upper(worst);

  std::vector<Point> scaled;
  scaled.reserve(inner_ball.size());
  for (const Point& p : inner_ball.vertices()) scaled.push_back(ratio * p);
  ConvexPolygon outer_ball = ConvexPolygon::from_ccw(std::move(scaled));

  return {make_norm(std::move(inner_ball)), make_norm(std::move(outer_ball)), std::move(ratio)};
}

}  // namespace hlab
