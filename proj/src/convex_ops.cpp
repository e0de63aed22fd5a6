#include "hlab/convex_ops.hpp"

#include <algorithm>

#include "hlab/error.hpp"

namespace hlab {

namespace {

std::vector<Point> mapped(const ConvexPolygon& polygon, auto&& f) {
  std::vector<Point> out;
  out.reserve(polygon.size());
  for (const Point& p : polygon.vertices()) out.push_back(f(p));
  return out;
}

}  // namespace

ConvexPolygon translate(const ConvexPolygon& polygon, const Point& offset) {
  return ConvexPolygon::from_ccw(mapped(polygon, [&](const Point& p) { return p + offset; }));
}

ConvexPolygon scale(const ConvexPolygon& polygon, const Scalar& factor) {
  if (factor == 0) return convex_hull(std::vector<Point>{{0, 0}});
  auto pts = mapped(polygon, [&](const Point& p) { return factor * p; });
  return factor > 0 ? ConvexPolygon::from_ccw(std::move(pts)) : convex_hull(pts);
}

ConvexPolygon contract_toward(const ConvexPolygon& polygon, const Point& target, const Scalar& lambda) {
  const auto pts = mapped(polygon, [&](const Point& p) { return lerp(p, target, lambda); });
  return convex_hull(pts);
}

ConvexPolygon negate(const ConvexPolygon& polygon) { return scale(polygon, Scalar(-1)); }

namespace {

std::vector<Point> edge_vectors(const ConvexPolygon& polygon) {
  std::vector<Point> out;
  if (polygon.is_segment()) {
    out.push_back(polygon[1] - polygon[0]);
    out.push_back(polygon[0] - polygon[1]);
  } else if (polygon.is_solid()) {
    for (std::size_t i = 0; i < polygon.size(); ++i) out.push_back(polygon.vertex(i + 1) - polygon[i]);
  }
  return out;
}

// Polar-angle order on [0, 2pi), exact.
bool angle_less(const Point& a, const Point& b) {
  const auto half = [](const Point& v) { return v.y < 0 || (v.y == 0 && v.x < 0); };
  const bool ha = half(a);
  const bool hb = half(b);
  if (ha != hb) return hb;
  return cross(a, b) > 0;
}

const Point& lowest(const ConvexPolygon& polygon) {
  return *std::min_element(polygon.vertices().begin(), polygon.vertices().end(),
                           [](const Point& a, const Point& b) { return a.y < b.y || (a.y == b.y && a.x < b.x); });
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  // Walk both edge sequences merged by angle, starting from the sum of the
  // lowest vertices.
  std::vector<Point> steps = edge_vectors(p);
  const std::vector<Point> qs = edge_vectors(q);
  steps.insert(steps.end(), qs.begin(), qs.end());
  std::stable_sort(steps.begin(), steps.end(), angle_less);

  std::vector<Point> walk;
  walk.reserve(steps.size() + 1);
  walk.push_back(lowest(p) + lowest(q));
  for (const Point& step : steps) walk.push_back(walk.back() + step);
  // The walk closes on its start; the hull drops that repeat and any
  // collinear vertices from parallel edges.
  return convex_hull(walk);
}

ConvexPolygon neighborhood(const ConvexPolygon& a, const Scalar& r, const PolyhedralNorm& norm) {
  if (r < 0) throw DomainError("negative radius");
  if (r == 0) return a;
  return minkowski_sum(a, scale(norm.unit_ball(), r));
}

namespace {

std::optional<ConvexPolygon> clip_by_solid(const ConvexPolygon& subject, const ConvexPolygon& clip) {
  std::vector<Point> ring = subject.vertices();
  for (const Segment& e : clip.edges()) {
    const Point dir = e.b - e.a;
    std::vector<Point> out;
    out.reserve(ring.size() + 2);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& cur = ring[i];
      const Point& nxt = ring[(i + 1) % ring.size()];
      const Scalar sc = cross(dir, cur - e.a);
      const Scalar sn = cross(dir, nxt - e.a);
      if (sc >= 0) out.push_back(cur);
      if ((sc < 0 && sn > 0) || (sc > 0 && sn < 0)) out.push_back(lerp(cur, nxt, sc / (sc - sn)));
    }
    if (out.empty()) return std::nullopt;
    ring = std::move(out);
  }
  return convex_hull(ring);
}

}  // namespace

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (q.is_solid()) return clip_by_solid(p, q);
  if (p.is_solid()) return clip_by_solid(q, p);
  const Segment s{p[0], p.is_segment() ? p[1] : p[0]};
  const auto clipped = clip_segment(s, q);
  if (!clipped) return std::nullopt;
  return to_polygon(*clipped);
}

namespace {

// Outward edge normals of the polygon (both sides of a segment, none for a point).
std::vector<Point> edge_normals(const ConvexPolygon& polygon) {
  std::vector<Point> out;
  for (const Segment& e : polygon.edges()) {
    const Point d = e.b - e.a;
    out.push_back({d.y, -d.x});
    if (polygon.is_segment()) out.push_back({-d.y, d.x});
  }
  return out;
}

// |x P| from the half-plane description of P ⊕ tU: its edge normals are
// those of P together with those of U, and the support function is additive,
// so |x P| = max(0, max_w (<w, x> - h_P(w)) / h_U(w)).
struct DistanceField {
  struct Term {
    Point w;         // scaled so that h_U(w) == 1
    Scalar offset;   // h_P(w)
  };
  std::vector<Term> terms;

  DistanceField(const ConvexPolygon& polygon, const PolyhedralNorm& norm) {
    for (const Point& w : norm.dual_vertices()) terms.push_back({w, support(polygon, w)});
    for (const Point& n : edge_normals(polygon)) {
      const Scalar hu = support(norm.unit_ball(), n);
      const Point w{n.x / hu, n.y / hu};
      terms.push_back({w, support(polygon, w)});
    }
  }

  Scalar operator()(const Point& x) const {
    Scalar best = 0;
    for (const Term& t : terms) {
      Scalar value = dot(t.w, x) - t.offset;
      if (value > best) best = std::move(value);
    }
    return best;
  }
};

}  // namespace

DistanceWitness point_distance(const Point& x, const ConvexPolygon& polygon, const PolyhedralNorm& norm) {
  if (contains_closed(polygon, x)) return {0, x};
  Scalar d = DistanceField(polygon, norm)(x);
  // The nearest points are P ∩ B_d(x); take its lexicographically smallest vertex.
  const auto touch = intersect(polygon, neighborhood(convex_hull(std::vector<Point>{x}), d, norm));
  if (!touch) throw std::logic_error("point_distance: empty projection set");
  return {std::move(d), touch->vertices().front()};
}

Scalar set_distance(const ConvexPolygon& p, const ConvexPolygon& q, const PolyhedralNorm& norm) {
  // min |a - b| over a in P, b in Q is the distance from the origin to Q ⊕ (-P).
  return DistanceField(minkowski_sum(q, negate(p)), norm)(Point{0, 0});
}

Scalar segment_distance(const Segment& s, const ConvexPolygon& polygon, const PolyhedralNorm& norm) {
  return set_distance(to_polygon(s), polygon, norm);
}

Scalar directed_hausdorff(const ConvexPolygon& from, const ConvexPolygon& to, const PolyhedralNorm& norm) {
  // x -> |x to| is convex when `to` is convex, so its maximum over the convex
  // set `from` is attained at a vertex.
  const DistanceField field(to, norm);
  Scalar best = 0;
  for (const Point& v : from.vertices()) {
    Scalar d = field(v);
    if (d > best) best = std::move(d);
  }
  return best;
}

Scalar hausdorff(const ConvexPolygon& p, const ConvexPolygon& q, const PolyhedralNorm& norm) {
  return std::max(directed_hausdorff(p, q, norm), directed_hausdorff(q, p, norm));
}

namespace {

// a x + b y + c
struct Affine {
  Scalar a, b, c;
  Scalar operator()(const Point& p) const { return a * p.x + b * p.y + c; }
};

std::optional<Point> meet(const Affine& f, const Affine& g) {
  const Scalar det = f.a * g.b - f.b * g.a;
  if (det == 0) return std::nullopt;
  return Point{(f.b * g.c - f.c * g.b) / det, (f.c * g.a - f.a * g.c) / det};
}

// sup over x in `from` of min_j |x Q_j| when there are several targets. The
// objective is a minimum of convex functions, so the vertex rule no longer
// applies. It is piecewise linear, linear on every cell of the arrangement
// of the lines where two of its linear pieces agree, so the supremum is
// attained at a vertex of that arrangement clipped to `from`.
Scalar directed_to_many(const ConvexPolygon& from, const std::vector<DistanceField>& fields) {
  const auto evaluate = [&](const Point& x) {
    Scalar best = fields.front()(x);
    for (std::size_t j = 1; j < fields.size(); ++j) {
      Scalar d = fields[j](x);
      if (d < best) best = std::move(d);
    }
    return best;
  };

  Scalar best = 0;
  const auto consider = [&](const Point& x) {
    Scalar d = evaluate(x);
    if (d > best) best = std::move(d);
  };
  for (const Point& v : from.vertices()) consider(v);
  if (from.is_point()) return best;

  std::vector<Affine> pieces{{0, 0, 0}};
  for (const DistanceField& field : fields) {
    for (const auto& t : field.terms) pieces.push_back({t.w.x, t.w.y, -t.offset});
  }
  std::vector<Affine> lines;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      Affine diff{pieces[i].a - pieces[j].a, pieces[i].b - pieces[j].b, pieces[i].c - pieces[j].c};
      if (diff.a == 0 && diff.b == 0) continue;
      // Only lines that reach the source polygon matter.
      bool below = false;
      bool above = false;
      for (const Point& v : from.vertices()) {
        const int s = sgn(Scalar(diff(v)));
        below = below || s <= 0;
        above = above || s >= 0;
      }
      if (below && above) lines.push_back(std::move(diff));
    }
  }
  for (const Segment& e : from.edges()) {
    const Point d = e.b - e.a;
    lines.push_back({d.y, -d.x, d.x * e.a.y - d.y * e.a.x});
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto x = meet(lines[i], lines[j]);
      if (x && contains_closed(from, *x)) consider(*x);
    }
  }
  return best;
}

}  // namespace

Scalar directed_hausdorff_union(std::span<const ConvexPolygon> from, std::span<const ConvexPolygon> to,
                                const PolyhedralNorm& norm) {
  if (from.empty() || to.empty()) throw InputError("empty union");
  if (to.size() == 1) {
    Scalar best = 0;
    for (const ConvexPolygon& part : from) {
      Scalar d = directed_hausdorff(part, to.front(), norm);
      if (d > best) best = std::move(d);
    }
    return best;
  }
  std::vector<DistanceField> fields;
  fields.reserve(to.size());
  for (const ConvexPolygon& part : to) fields.emplace_back(part, norm);
  Scalar best = 0;
  for (const ConvexPolygon& part : from) {
    Scalar d = directed_to_many(part, fields);
    if (d > best) best = std::move(d);
  }
  return best;
}

Scalar hausdorff_union(std::span<const ConvexPolygon> ps, std::span<const ConvexPolygon> qs,
                       const PolyhedralNorm& norm) {
  if (ps.empty() || qs.empty()) throw InputError("empty union");
  return std::max(directed_hausdorff_union(ps, qs, norm), directed_hausdorff_union(qs, ps, norm));
}

bool subset_of(const ConvexPolygon& p, const ConvexPolygon& q) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const Point& v) { return contains_closed(q, v); });
}

}  // namespace hlab
