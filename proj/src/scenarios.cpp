#include "hlab/scenarios.hpp"

#include "hlab/error.hpp"

namespace hlab {

PolyhedralNorm NormSpec::resolve() const {
  switch (kind) {
    case Kind::linf:
      return linf_norm();
    case Kind::l1:
      return l1_norm();
    case Kind::ball:
      if (!ball) throw InputError("norm of kind \"ball\" needs a \"ball\" polygon");
      return make_norm(*ball);
    case Kind::euclidean_approx:
      return euclidean_approx(k).inner;
  }
  throw std::logic_error("unknown norm kind");
}

std::vector<ConvexPolygon> f_union_eval(const ConvexPolygon& a, std::span<const ConvexPolygon> b_parts,
                                        const Scalar& r, const PolyhedralNorm& norm) {
  if (b_parts.empty()) throw InputError("empty union");
  const ConvexPolygon ball = neighborhood(a, r, norm);
  std::vector<ConvexPolygon> out;
  for (const ConvexPolygon& part : b_parts) {
    if (auto piece = intersect(ball, part)) out.push_back(std::move(*piece));
  }
  if (out.empty()) throw DomainError("radius below union distance");
  return out;
}

namespace {

ConvexPolygon poly(std::vector<Point> pts) { return convex_hull(pts); }

}  // namespace

Figure1Report figure1_scenario() {
  Figure1Report report{
      Scene{NormSpec{}, poly({{0, 0}, {8, 0}}), {poly({{0, 1}, {8, 2}, {0, 3}})}, rational(3, 2), rational(1, 4),
            std::pair{rational(5, 4), rational(7, 4)}, "figure1"},
      rational(1, 32),
      {},
      0,
      false,
      {},
      0};
  const PolyhedralNorm norm = report.scene.norm.resolve();
  const ConvexPolygon& a = report.scene.a;
  const ConvexPolygon& b = report.scene.b_parts.front();

  const std::vector<Scalar> radii{rational(5, 4), rational(3, 2), rational(7, 4)};
  report.rows = modulus_rows(a, b, norm, radii, report.h);
  report.certified_strictly_greater_than_one = true;
  for (const ScanRow& row : report.rows) {
    if (row.ratio > report.max_ratio) report.max_ratio = row.ratio;
    if (!(row.ratio > 1)) report.certified_strictly_greater_than_one = false;
  }

  const std::vector<Scalar> saturated{Scalar(2), rational(9, 4), rational(5, 2)};
  report.saturated_rows = modulus_rows(a, b, norm, saturated, report.h);
  for (const ScanRow& row : report.saturated_rows) {
    if (row.ratio > report.saturated_max_ratio) report.saturated_max_ratio = row.ratio;
  }
  return report;
}

Figure2Report figure2_scenario() {
  const ConvexPolygon a = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const ConvexPolygon near_part = poly({{-2, 0}, {-1, 0}, {-1, 1}, {-2, 1}});
  const Point far_point{3, rational(1, 2)};
  const ConvexPolygon far_part = poly({far_point});

  Scene scene{NormSpec{}, a, {near_part, far_part}, Scalar(2), std::nullopt,
              std::pair{rational(3, 2), rational(5, 2)}, "figure2"};
  const PolyhedralNorm norm = scene.norm.resolve();

  JumpReport jump{2, {}, {}, point_distance(far_point, near_part, norm).distance};
  for (long den : {2, 4, 8, 16, 32}) jump.deltas.push_back(rational(1, den));

  const auto at_rho = f_union_eval(a, scene.b_parts, jump.rho, norm);
  bool certified = jump.jump_lower_bound > 0;
  for (const Scalar& delta : jump.deltas) {
    const auto before = f_union_eval(a, scene.b_parts, jump.rho - delta, norm);
    Scalar gap = hausdorff_union(before, at_rho, norm);
    if (gap < jump.jump_lower_bound) certified = false;
    jump.gaps.push_back(std::move(gap));
  }

  // Control: the same data made convex. Gaps must now shrink with delta.
  std::vector<Point> all = near_part.vertices();
  all.push_back(far_point);
  Scene control{NormSpec{}, a, {convex_hull(all)}, Scalar(2), std::nullopt, scene.r_range, "figure2-convexified"};
  const ConvexPolygon& hull = control.b_parts.front();
  const ConvexPolygon control_at_rho = f_eval(a, hull, jump.rho, norm);
  std::vector<Scalar> control_gaps;
  Scalar worst_slope = 0;
  for (const Scalar& delta : jump.deltas) {
    Scalar gap = hausdorff(f_eval(a, hull, jump.rho - delta, norm), control_at_rho, norm);
    Scalar slope = gap / delta;
    if (slope > worst_slope) worst_slope = std::move(slope);
    control_gaps.push_back(std::move(gap));
  }

  return {std::move(scene), std::move(jump), certified, std::move(control), std::move(control_gaps),
          std::move(worst_slope)};
}

}  // namespace hlab
