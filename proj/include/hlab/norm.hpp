#pragma once

#include <vector>

#include "hlab/geom.hpp"

namespace hlab {

/// Norm whose unit ball is a centrally symmetric convex polygon with the
/// origin in its interior.
class PolyhedralNorm {
 public:
  const ConvexPolygon& unit_ball() const { return ball_; }

  /// Edge normals of the unit ball scaled so that support(ball, w) == 1.
  /// The norm is then max over w of <w, v>.
  const std::vector<Point>& dual_vertices() const { return dual_; }

  Scalar operator()(const Point& v) const;

  friend PolyhedralNorm make_norm(ConvexPolygon ball);

 private:
  PolyhedralNorm(ConvexPolygon ball, std::vector<Point> dual)
      : ball_(std::move(ball)), dual_(std::move(dual)) {}

  ConvexPolygon ball_;
  std::vector<Point> dual_;
};

/// Throws InputError "ball not centrally symmetric" / "origin not interior".
PolyhedralNorm make_norm(ConvexPolygon ball);

PolyhedralNorm linf_norm();
PolyhedralNorm l1_norm();

/// Minkowski functional min{t >= 0 : v in t * ball}.
Scalar gauge(const PolyhedralNorm& norm, const Point& v);

/// max over the polygon of <x, u>. Throws InputError("zero direction") for u = 0.
Scalar support(const ConvexPolygon& polygon, const Point& u);

/// inner ⊆ Euclidean unit disc ⊆ outer, outer = ratio_bound * inner.
struct NormSandwich {
  PolyhedralNorm inner;
  PolyhedralNorm outer;
  Scalar ratio_bound;
};

/// 2k-gon with rational vertices exactly on the unit circle, near-regular,
/// plus its certified circumscribing scale. Throws InputError("k too small") for k < 3.
NormSandwich euclidean_approx(int k);

}  // namespace hlab
