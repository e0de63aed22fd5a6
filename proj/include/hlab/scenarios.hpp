#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlab/continuity.hpp"

namespace hlab {

/// Norm as written in a scene file.
struct NormSpec {
  enum class Kind { linf, l1, ball, euclidean_approx };
  Kind kind = Kind::linf;
  std::optional<ConvexPolygon> ball;  // Kind::ball
  int k = 0;                          // Kind::euclidean_approx

  /// The polyhedral norm computations run under. A euclidean_approx scene
  /// resolves to the inscribed polygon of its sandwich.
  PolyhedralNorm resolve() const;
};

struct Scene {
  NormSpec norm;
  ConvexPolygon a;
  std::vector<ConvexPolygon> b_parts;  // one part: the convex case
  std::optional<Scalar> r;
  std::optional<Scalar> epsilon;
  std::optional<std::pair<Scalar, Scalar>> r_range;
  std::string label;
};

/// f extended componentwise to B = ∪ parts; empty pieces dropped.
/// Throws DomainError("radius below union distance") when every piece is empty.
std::vector<ConvexPolygon> f_union_eval(const ConvexPolygon& a, std::span<const ConvexPolygon> b_parts,
                                        const Scalar& r, const PolyhedralNorm& norm);

struct Figure1Report {
  Scene scene;
  Scalar h;
  std::vector<ScanRow> rows;            // slanted-exit regime, r in (1, 2)
  Scalar max_ratio;
  bool certified_strictly_greater_than_one = false;
  std::vector<ScanRow> saturated_rows;  // r >= 2: the cut moves along B's top edges
  Scalar saturated_max_ratio;
};

/// Segment A under L∞ against a triangle whose lower edge has slope 1/8: a
/// radius step h moves the corner of f(r) by 8h.
Figure1Report figure1_scenario();

struct JumpReport {
  Scalar rho;
  std::vector<Scalar> deltas;
  std::vector<Scalar> gaps;  // d_H(f(rho - delta), f(rho)) over unions
  Scalar jump_lower_bound;
};

struct Figure2Report {
  Scene scene;
  JumpReport jump;
  bool certified_discontinuity = false;
  Scene control_scene;                  // B replaced by the hull of its parts
  std::vector<Scalar> control_gaps;
  Scalar control_max_gap_over_delta;
};

/// Non-convex B (a box and a far single point) under L∞: a new component
/// appears at rho = 2 and f jumps by 4.
Figure2Report figure2_scenario();

}  // namespace hlab
