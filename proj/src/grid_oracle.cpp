#include <algorithm>
#include <cmath>
#include <limits>

#include "hlab/continuity.hpp"
#include "hlab/error.hpp"

// Sampling argument. For a convex component S and a closed grid cell C, the
// polygon C ∩ S has its vertices among: lattice points of S, crossings of
// S's edges with grid lines, and vertices of S. Keeping all of those as
// samples puts every point of S within one cell diameter D of a sample, and
// every sample lies in S. With H the Hausdorff distance of the samplings
// (nearest-sample distances taken only from "frontier" samples, see below),
// the true distance lies in [H - D, H + D].
//
// Frontier: for a point outside the target its nearest target point b is on
// the boundary, and the cell holding b meets the boundary, so the vertices of
// that cell's piece of the target are within D of b. Those vertices are the
// crossings, the polygon vertices and the lattice points of the target with a
// non-interior point in their 3x3 lattice neighbourhood.

namespace hlab {

namespace {

struct Sample {
  Point exact;
  double x;
  double y;
  bool frontier;
};

mpz_class ceil_div(const Scalar& v, const Scalar& step) {
  const Scalar q = v / step;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class floor_div(const Scalar& v, const Scalar& step) {
  const Scalar q = v / step;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Sample make_sample(Point p, bool frontier) {
  const double x = p.x.get_d();
  const double y = p.y.get_d();
  return {std::move(p), x, y, frontier};
}

void sample_component(const ConvexPolygon& s, const Scalar& step, std::vector<Sample>& out) {
  Scalar min_x = s[0].x, max_x = s[0].x, min_y = s[0].y, max_y = s[0].y;
  for (const Point& v : s.vertices()) {
    if (v.x < min_x) min_x = v.x;
    if (v.x > max_x) max_x = v.x;
    if (v.y < min_y) min_y = v.y;
    if (v.y > max_y) max_y = v.y;
  }
  const mpz_class i0 = ceil_div(min_x, step) - 1;
  const mpz_class i1 = floor_div(max_x, step) + 1;
  const mpz_class j0 = ceil_div(min_y, step) - 1;
  const mpz_class j1 = floor_div(max_y, step) + 1;
  const long nx = mpz_class(i1 - i0 + 1).get_si();
  const long ny = mpz_class(j1 - j0 + 1).get_si();

  std::vector<Membership> grid(static_cast<std::size_t>(nx * ny), Membership::outside);
  const auto at = [&](long i, long j) -> Membership& { return grid[static_cast<std::size_t>(i * ny + j)]; };
  std::size_t lattice_count = 0;
  for (long i = 1; i + 1 < nx; ++i) {
    for (long j = 1; j + 1 < ny; ++j) {
      const Point p{step * (i0 + i), step * (j0 + j)};
      at(i, j) = contains_point(s, p);
      if (at(i, j) != Membership::outside) ++lattice_count;
    }
  }
  if (s.is_solid() && lattice_count == 0) throw InputError("grid too coarse");

  for (long i = 1; i + 1 < nx; ++i) {
    for (long j = 1; j + 1 < ny; ++j) {
      if (at(i, j) == Membership::outside) continue;
      bool frontier = false;
      for (long di = -1; di <= 1 && !frontier; ++di) {
        for (long dj = -1; dj <= 1; ++dj) {
          if (at(i + di, j + dj) != Membership::interior) {
            frontier = true;
            break;
          }
        }
      }
      out.push_back(make_sample({step * (i0 + i), step * (j0 + j)}, frontier));
    }
  }

  for (const Point& v : s.vertices()) out.push_back(make_sample(v, true));
  for (const Segment& e : s.edges()) {
    const Point d = e.b - e.a;
    if (d.x != 0) {
      const Scalar lo = std::min(e.a.x, e.b.x);
      const Scalar hi = std::max(e.a.x, e.b.x);
      for (mpz_class i = ceil_div(lo, step); i <= floor_div(hi, step); ++i) {
        const Scalar t = (step * i - e.a.x) / d.x;
        out.push_back(make_sample(lerp(e.a, e.b, t), true));
      }
    }
    if (d.y != 0) {
      const Scalar lo = std::min(e.a.y, e.b.y);
      const Scalar hi = std::max(e.a.y, e.b.y);
      for (mpz_class j = ceil_div(lo, step); j <= floor_div(hi, step); ++j) {
        const Scalar t = (step * j - e.a.y) / d.y;
        out.push_back(make_sample(lerp(e.a, e.b, t), true));
      }
    }
  }
}

std::vector<Sample> sample_union(std::span<const ConvexPolygon> parts, const Scalar& step) {
  std::vector<Sample> out;
  for (const ConvexPolygon& part : parts) sample_component(part, step, out);
  return out;
}

struct FloatNorm {
  std::vector<std::pair<double, double>> dual;
  explicit FloatNorm(const PolyhedralNorm& norm) {
    for (const Point& w : norm.dual_vertices()) dual.emplace_back(w.x.get_d(), w.y.get_d());
  }
  double operator()(double x, double y) const {
    double best = 0;
    for (const auto& [a, b] : dual) best = std::max(best, a * x + b * y);
    return best;
  }
};

// Floating values only steer the search; every reported value is exact.
// Candidates within kSlack of the floating optimum are re-evaluated exactly,
// which is far above the rounding error for the magnitudes involved.
constexpr double kSlack = 1e-7;

Scalar directed(const std::vector<Sample>& from, std::span<const ConvexPolygon> to_parts,
                const std::vector<Sample>& to, const PolyhedralNorm& norm) {
  const FloatNorm fnorm(norm);
  std::vector<const Sample*> frontier;
  for (const Sample& s : to) {
    if (s.frontier) frontier.push_back(&s);
  }

  // exact nearest-frontier distance for a point outside the target
  const auto exact_nearest = [&](const Sample& g) {
    double best = std::numeric_limits<double>::infinity();
    for (const Sample* f : frontier) best = std::min(best, fnorm(g.x - f->x, g.y - f->y));
    std::optional<Scalar> exact;
    for (const Sample* f : frontier) {
      if (fnorm(g.x - f->x, g.y - f->y) <= best + kSlack * (1 + best)) {
        Scalar d = gauge(norm, g.exact - f->exact);
        if (!exact || d < *exact) exact = std::move(d);
      }
    }
    return std::move(*exact);
  };

  std::vector<std::pair<double, const Sample*>> outside;
  double top = 0;
  for (const Sample& g : from) {
    const bool inside = std::any_of(to_parts.begin(), to_parts.end(),
                                    [&](const ConvexPolygon& q) { return contains_closed(q, g.exact); });
    if (inside) continue;
    double best = std::numeric_limits<double>::infinity();
    for (const Sample* f : frontier) best = std::min(best, fnorm(g.x - f->x, g.y - f->y));
    outside.emplace_back(best, &g);
    top = std::max(top, best);
  }

  Scalar result = 0;
  for (const auto& [approx, g] : outside) {
    if (approx + kSlack * (1 + top) < top) continue;
    Scalar d = exact_nearest(*g);
    if (d > result) result = std::move(d);
  }
  return result;
}

}  // namespace

OracleInterval grid_oracle_hausdorff(std::span<const ConvexPolygon> ps, std::span<const ConvexPolygon> qs,
                                     const PolyhedralNorm& norm, const Scalar& step) {
  if (step <= 0) throw InputError("step must be positive");
  if (ps.empty() || qs.empty()) throw InputError("empty union");
  const std::vector<Sample> p_samples = sample_union(ps, step);
  const std::vector<Sample> q_samples = sample_union(qs, step);

  OracleInterval out;
  out.samples = p_samples.size() + q_samples.size();
  out.cell_diameter = std::max(gauge(norm, {step, step}), gauge(norm, {step, Scalar(-step)}));
  out.estimate = std::max(directed(p_samples, qs, q_samples, norm), directed(q_samples, ps, p_samples, norm));
  out.lo = out.estimate - out.cell_diameter;
  if (out.lo < 0) out.lo = 0;
  out.hi = out.estimate + out.cell_diameter;
  return out;
}

}  // namespace hlab
