#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hlab/geom.hpp"
#include "hlab/norm.hpp"

namespace hlab {

/// Distance from a point to a set together with one nearest point.
struct DistanceWitness {
  Scalar distance;
  Point projection_point;
};

ConvexPolygon translate(const ConvexPolygon& polygon, const Point& offset);
ConvexPolygon scale(const ConvexPolygon& polygon, const Scalar& factor);
/// Image under x -> x + lambda (target - x).
ConvexPolygon contract_toward(const ConvexPolygon& polygon, const Point& target, const Scalar& lambda);
/// Point reflection through the origin.
ConvexPolygon negate(const ConvexPolygon& polygon);

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// Closed r-neighborhood A ⊕ r * unit_ball. Throws DomainError("negative radius").
ConvexPolygon neighborhood(const ConvexPolygon& a, const Scalar& r, const PolyhedralNorm& norm);

/// Exact intersection; nullopt when disjoint.
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q);

/// |x P| with the lexicographically smallest nearest point.
DistanceWitness point_distance(const Point& x, const ConvexPolygon& polygon, const PolyhedralNorm& norm);

/// min over a in s of |a P|.
Scalar segment_distance(const Segment& s, const ConvexPolygon& polygon, const PolyhedralNorm& norm);

/// min over a in P of |a Q|; zero iff the sets meet.
Scalar set_distance(const ConvexPolygon& p, const ConvexPolygon& q, const PolyhedralNorm& norm);

/// sup over x in `from` of |x to|.
Scalar directed_hausdorff(const ConvexPolygon& from, const ConvexPolygon& to, const PolyhedralNorm& norm);

Scalar hausdorff(const ConvexPolygon& p, const ConvexPolygon& q, const PolyhedralNorm& norm);

/// sup over x in ∪from of min over parts of |x part|.
Scalar directed_hausdorff_union(std::span<const ConvexPolygon> from, std::span<const ConvexPolygon> to,
                                const PolyhedralNorm& norm);

/// Hausdorff distance between finite unions of convex polygons. Throws
/// InputError("empty union") when either list is empty.
Scalar hausdorff_union(std::span<const ConvexPolygon> ps, std::span<const ConvexPolygon> qs,
                       const PolyhedralNorm& norm);

bool subset_of(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace hlab
