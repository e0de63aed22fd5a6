#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlab/convex_ops.hpp"

namespace hlab {

/// f(r) = B_r(A) ∩ B. Throws DomainError("radius below set distance") when
/// r < |A B|.
ConvexPolygon f_eval(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const PolyhedralNorm& norm);

/// Right-continuity witness: any r' in [r, r + delta) keeps d_H(f(r), f(r'))
/// within epsilon.
struct RightWitness {
  Scalar epsilon;
  ConvexPolygon m;                 // f(r)
  std::vector<Segment> k;          // B ∩ ∂B_eps(M), as pieces of the boundary
  std::optional<Scalar> delta;     // nullopt: +inf, K is empty

  bool infinite() const { return !delta.has_value(); }
};

RightWitness delta_right(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const Scalar& epsilon,
                         const PolyhedralNorm& norm);

/// Left-continuity witness built from the contraction g(x) = x + lambda (p - x).
struct LeftWitness {
  Scalar epsilon;
  ConvexPolygon m;
  Point p;
  Scalar lambda;
  Scalar l;                        // max over M of |p - x|
  ConvexPolygon gm;                // g(M)
  Scalar delta;                    // |g(M) ∂B_r(A)|
};

/// Throws DomainError("left witness needs r strictly above set distance") when r <= |A B|.
LeftWitness delta_left(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const Scalar& epsilon,
                       const PolyhedralNorm& norm);

enum class Side { left, right };

struct ModulusReport {
  Side side = Side::right;
  Scalar r;
  Scalar epsilon;
  bool applicable = true;          // false for the left side at r = |A B|
  std::string note;
  std::vector<Scalar> r_prime;
  std::vector<Scalar> gaps;        // d_H(f(r), f(r')) per sample
  bool all_passed = true;
  Scalar worst_gap;
};

struct ModulusCheck {
  RightWitness right;
  std::optional<LeftWitness> left;
  ModulusReport right_report;
  ModulusReport left_report;
};

inline constexpr int kDefaultSamples = 8;

/// Samples r' equispaced inside each witness window (right window capped at
/// `cap`) and checks d_H(f(r), f(r')) <= epsilon exactly.
ModulusCheck verify_modulus(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const Scalar& epsilon,
                            const PolyhedralNorm& norm, int samples = kDefaultSamples, const Scalar& cap = 1);

struct ScanRow {
  Scalar r;
  Scalar r_next;
  Scalar gap;    // d_H(f(r), f(r_next))
  Scalar ratio;  // gap / (r_next - r)
};

/// Rows at r_lo + i h for i < steps, h = (r_hi - r_lo) / steps.
std::vector<ScanRow> modulus_scan(const ConvexPolygon& a, const ConvexPolygon& b, const PolyhedralNorm& norm,
                                  const Scalar& r_lo, const Scalar& r_hi, int steps);

/// One row per radius with a fixed increment h.
std::vector<ScanRow> modulus_rows(const ConvexPolygon& a, const ConvexPolygon& b, const PolyhedralNorm& norm,
                                  std::span<const Scalar> radii, const Scalar& h);

/// Two-sided enclosure of a Hausdorff distance from grid samples.
struct OracleInterval {
  Scalar lo;
  Scalar hi;
  Scalar estimate;       // Hausdorff distance of the samplings
  Scalar cell_diameter;  // norm diameter of one grid cell
  std::size_t samples = 0;

  bool contains(const Scalar& value) const { return lo <= value && value <= hi; }
};

/// Brute-force Hausdorff bracket between two finite unions of convex
/// polygons on the lattice of spacing `step`. Independent of the exact
/// distance routines: uses only the gauge and membership predicates.
/// Throws InputError("step must be positive") / ("grid too coarse").
OracleInterval grid_oracle_hausdorff(std::span<const ConvexPolygon> ps, std::span<const ConvexPolygon> qs,
                                     const PolyhedralNorm& norm, const Scalar& step);

}  // namespace hlab
