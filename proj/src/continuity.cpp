#include "hlab/continuity.hpp"

#include "hlab/error.hpp"

namespace hlab {

ConvexPolygon f_eval(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const PolyhedralNorm& norm) {
  if (r < set_distance(a, b, norm)) throw DomainError("radius below set distance");
  auto m = intersect(neighborhood(a, r, norm), b);
  if (!m) throw std::logic_error("f_eval: empty intersection inside the domain");
  return std::move(*m);
}

namespace {

void require_positive_epsilon(const Scalar& epsilon) {
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
}

}  // namespace

RightWitness delta_right(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const Scalar& epsilon,
                         const PolyhedralNorm& norm) {
  require_positive_epsilon(epsilon);
  RightWitness w{epsilon, f_eval(a, b, r, norm), {}, std::nullopt};

  // K = B ∩ ∂B_eps(M), collected edge by edge.
  const ConvexPolygon shell = neighborhood(w.m, epsilon, norm);
  for (const Segment& edge : shell.edges()) {
    if (auto piece = clip_segment(edge, b)) w.k.push_back(std::move(*piece));
  }
  if (w.k.empty()) return w;

  // K lies at distance exactly eps from M, hence outside B_r(A); delta > 0.
  const ConvexPolygon ball = neighborhood(a, r, norm);
  for (const Segment& piece : w.k) {
    Scalar d = segment_distance(piece, ball, norm);
    if (!w.delta || d < *w.delta) w.delta = std::move(d);
  }
  return w;
}

LeftWitness delta_left(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const Scalar& epsilon,
                       const PolyhedralNorm& norm) {
  require_positive_epsilon(epsilon);
  const Scalar gap = set_distance(a, b, norm);
  if (r <= gap) throw DomainError("left witness needs r strictly above set distance");

  ConvexPolygon m = f_eval(a, b, r, norm);

  // p: lexicographically smallest point of B nearest to A, so |p A| = |A B| < r.
  const auto nearest = intersect(b, neighborhood(a, gap, norm));
  if (!nearest) throw std::logic_error("delta_left: no point of B realizes |A B|");
  Point p = nearest->vertices().front();

  Scalar l = 0;
  for (const Point& x : m.vertices()) {
    Scalar d = gauge(norm, p - x);
    if (d > l) l = std::move(d);
  }
  Scalar lambda = rational(1, 2);
  if (l > 0) {
    Scalar ratio = epsilon / l;
    if (ratio < lambda) lambda = std::move(ratio);
  }
  ConvexPolygon gm = contract_toward(m, p, lambda);

  // g(M) lies in U_r(A); its distance to ∂B_r(A) is the witness.
  const ConvexPolygon ball = neighborhood(a, r, norm);
  std::optional<Scalar> delta;
  for (const Segment& edge : ball.edges()) {
    Scalar d = segment_distance(edge, gm, norm);
    if (!delta || d < *delta) delta = std::move(d);
  }
  return {epsilon, std::move(m), std::move(p), std::move(lambda), std::move(l), std::move(gm), std::move(*delta)};
}

namespace {

void check_samples(ModulusReport& report, const ConvexPolygon& a, const ConvexPolygon& b, const ConvexPolygon& m,
                   const PolyhedralNorm& norm) {
  report.worst_gap = 0;
  report.all_passed = true;
  for (const Scalar& rp : report.r_prime) {
    Scalar gap = hausdorff(m, f_eval(a, b, rp, norm), norm);
    if (gap > report.epsilon) report.all_passed = false;
    if (gap > report.worst_gap) report.worst_gap = gap;
    report.gaps.push_back(std::move(gap));
  }
}

}  // namespace

ModulusCheck verify_modulus(const ConvexPolygon& a, const ConvexPolygon& b, const Scalar& r, const Scalar& epsilon,
                            const PolyhedralNorm& norm, int samples, const Scalar& cap) {
  if (samples < 1) throw InputError("samples must be >= 1");
  ModulusCheck out{delta_right(a, b, r, epsilon, norm), std::nullopt, {}, {}};
  const ConvexPolygon& m = out.right.m;

  ModulusReport& right = out.right_report;
  right.side = Side::right;
  right.r = r;
  right.epsilon = epsilon;
  Scalar width = cap;
  if (out.right.delta && *out.right.delta < width) width = *out.right.delta;
  for (int i = 0; i < samples; ++i) right.r_prime.push_back(r + width * i / samples);
  check_samples(right, a, b, m, norm);

  ModulusReport& left = out.left_report;
  left.side = Side::left;
  left.r = r;
  left.epsilon = epsilon;
  const Scalar gap = set_distance(a, b, norm);
  if (r == gap) {
    left.applicable = false;
    left.note = "not applicable at domain endpoint";
    left.worst_gap = 0;
    return out;
  }
  out.left = delta_left(a, b, r, epsilon, norm);
  Scalar lo = r - out.left->delta;
  if (lo < gap) lo = gap;
  const Scalar span = r - lo;
  for (int i = 0; i < samples; ++i) left.r_prime.push_back(r - span * i / samples);
  check_samples(left, a, b, m, norm);
  return out;
}

std::vector<ScanRow> modulus_rows(const ConvexPolygon& a, const ConvexPolygon& b, const PolyhedralNorm& norm,
                                  std::span<const Scalar> radii, const Scalar& h) {
  if (h <= 0) throw InputError("radius increment must be positive");
  std::vector<ScanRow> rows;
  rows.reserve(radii.size());
  for (const Scalar& r : radii) {
    Scalar next = r + h;
    Scalar gap = hausdorff(f_eval(a, b, r, norm), f_eval(a, b, next, norm), norm);
    Scalar ratio = gap / h;
    rows.push_back({r, std::move(next), std::move(gap), std::move(ratio)});
  }
  return rows;
}

std::vector<ScanRow> modulus_scan(const ConvexPolygon& a, const ConvexPolygon& b, const PolyhedralNorm& norm,
                                  const Scalar& r_lo, const Scalar& r_hi, int steps) {
  if (steps < 1) throw InputError("steps must be ≥ 1");
  if (r_hi <= r_lo) throw InputError("r_range must be increasing");
  const Scalar h = (r_hi - r_lo) / steps;
  std::vector<Scalar> radii;
  radii.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) radii.push_back(r_lo + h * i);
  return modulus_rows(a, b, norm, radii, h);
}

}  // namespace hlab
