// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hlab/cli.hpp"
#include "hlab/continuity.hpp"
#include "hlab/scenarios.hpp"
#include "hlab/scene_io.hpp"

using namespace hlab;

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Scalar scalar(long lo, long hi, long max_den = 16) {
    const long den = integer(1, max_den);
    return rational(integer(lo * den, hi * den), den);
  }

  Point point(long lo, long hi, long max_den = 16) { return {scalar(lo, hi, max_den), scalar(lo, hi, max_den)}; }

  /// min_v..max_v vertices, coordinates with denominators <= 16, shifted by
  /// an integer offset in [-spread, spread]^2.
  ConvexPolygon polygon(std::size_t min_v, std::size_t max_v, long spread = 0) {
    const Point offset{integer(-spread, spread), integer(-spread, spread)};
    for (;;) {
      std::vector<Point> pts;
      const long n = integer(static_cast<long>(min_v), static_cast<long>(max_v) + 4);
      for (long i = 0; i < n; ++i) pts.push_back(point(-2, 2));
      ConvexPolygon p = convex_hull(pts);
      if (p.size() >= min_v && p.size() <= max_v) return translate(p, offset);
    }
  }

  PolyhedralNorm hexagon_norm() {
    for (;;) {
      std::vector<Point> pts;
      for (int i = 0; i < 3; ++i) {
        const Point p = point(-3, 3, 4);
        pts.push_back(p);
        pts.push_back(-p);
      }
      const ConvexPolygon ball = convex_hull(pts);
      if (ball.size() == 6 && contains_point(ball, {0, 0}) == Membership::interior) return make_norm(ball);
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body, double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    std::ostringstream why;
    why << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
    o.fail(why.str());
  }
  std::ostringstream line;
  line << (o.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << std::fixed;
  line.precision(2);
  line << seconds << " s)";
  if (!o.passed) line << " -- " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.passed) ++failures;
}

std::vector<PolyhedralNorm> test_norms(Rng& rng) { return {linf_norm(), l1_norm(), rng.hexagon_norm()}; }

Outcome continuity_witnesses() {
  Outcome o;
  Rng rng(1001);
  const auto norms = test_norms(rng);
  const std::vector<Scalar> epsilons{1, rational(1, 4), rational(1, 16)};
  for (std::size_t n = 0; n < norms.size(); ++n) {
    for (int i = 0; i < 50; ++i) {
      const ConvexPolygon a = rng.polygon(4, 10, 3);
      const ConvexPolygon b = rng.polygon(4, 10, 3);
      const Scalar d = set_distance(a, b, norms[n]);
      for (const Scalar& r : {d, Scalar(d + rational(1, 2)), Scalar(d + 2)}) {
        for (const Scalar& eps : epsilons) {
          const ModulusCheck check = verify_modulus(a, b, r, eps, norms[n], 8);
          const std::string where = "norm " + std::to_string(n) + " pair " + std::to_string(i) + " r " +
                                    to_string(r) + " eps " + to_string(eps);
          if (check.right.delta && *check.right.delta <= 0) o.fail("delta_right not positive at " + where);
          if (!check.right_report.all_passed || check.right_report.r_prime.size() != 8) o.fail("right side at " + where);
          if (r == d) {
            if (check.left_report.applicable) o.fail("left side applicable at endpoint, " + where);
            continue;
          }
          if (!check.left || check.left->delta <= 0) o.fail("delta_left not positive at " + where);
          if (!check.left_report.all_passed || check.left_report.r_prime.size() != 8) o.fail("left side at " + where);
        }
      }
    }
  }
  return o;
}

Outcome figure1() {
  Outcome o;
  const Figure1Report rep = figure1_scenario();
  if (rep.max_ratio != 8) o.fail("max_ratio " + to_string(rep.max_ratio));
  if (!rep.certified_strictly_greater_than_one) o.fail("certificate flag unset");
  for (const ScanRow& row : rep.rows) {
    if (!(row.ratio > 1)) o.fail("ratio " + to_string(row.ratio) + " at r " + to_string(row.r));
  }
  return o;
}

Outcome figure2() {
  Outcome o;
  const Figure2Report rep = figure2_scenario();
  if (rep.jump.deltas.empty() || rep.jump.deltas.back() != rational(1, 32)) o.fail("deltas do not reach 1/32");
  for (std::size_t i = 0; i < rep.jump.gaps.size(); ++i) {
    if (rep.jump.gaps[i] < 4) o.fail("gap " + to_string(rep.jump.gaps[i]) + " below 4");
    if (rep.control_gaps.at(i) > 2 * rep.jump.deltas[i]) {
      o.fail("control gap " + to_string(rep.control_gaps[i]) + " above 2 delta");
    }
  }
  if (!rep.certified_discontinuity) o.fail("certificate flag unset");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(1004);
  const auto norms = test_norms(rng);
  const Scalar step = rational(1, 64);
  for (int i = 0; i < 20; ++i) {
    const PolyhedralNorm& norm = norms[i % norms.size()];
    const std::vector<ConvexPolygon> ps{rng.polygon(3, 6, 2)};
    const std::vector<ConvexPolygon> qs{rng.polygon(3, 6, 2)};
    const Scalar exact = hausdorff(ps[0], qs[0], norm);
    const OracleInterval iv = grid_oracle_hausdorff(ps, qs, norm, step);
    if (!iv.contains(exact)) {
      o.fail("instance " + std::to_string(i) + ": " + to_string(exact) + " outside [" + to_string(iv.lo) + ", " +
             to_string(iv.hi) + "]");
    }
    const Scalar diameter = std::max(gauge(norm, {step, step}), gauge(norm, {step, Scalar(-step)}));
    if (iv.hi - iv.lo > 2 * diameter) o.fail("instance " + std::to_string(i) + ": interval too wide");
  }
  return o;
}

Outcome axioms() {
  Outcome o;
  Rng rng(1005);
  const auto norms = test_norms(rng);
  for (int i = 0; i < 200; ++i) {
    const PolyhedralNorm& norm = norms[i % norms.size()];
    const ConvexPolygon x = rng.polygon(1, 8, 3), y = rng.polygon(1, 8, 3), z = rng.polygon(1, 8, 3);
    const Scalar xy = hausdorff(x, y, norm), yx = hausdorff(y, x, norm);
    if (xy != yx) o.fail("asymmetric triple " + std::to_string(i));
    if (xy > hausdorff(x, z, norm) + hausdorff(z, y, norm)) o.fail("triangle inequality, triple " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    const PolyhedralNorm& norm = norms[i % norms.size()];
    const ConvexPolygon a = rng.polygon(1, 8);
    const Scalar r1 = rng.scalar(0, 3), r2 = rng.scalar(0, 3);
    if (neighborhood(neighborhood(a, r1, norm), r2, norm) != neighborhood(a, r1 + r2, norm)) {
      o.fail("semigroup identity, case " + std::to_string(i));
    }
  }
  const ConvexPolygon p = rng.polygon(3, 10), q = rng.polygon(3, 10);
  const ConvexPolygon sum = minkowski_sum(p, q);
  for (int i = 0; i < 200; ++i) {
    Point u = rng.point(-5, 5);
    if (u == Point{0, 0}) u = {1, 0};
    if (support(sum, u) != support(p, u) + support(q, u)) o.fail("support additivity, direction " + std::to_string(i));
  }
  return o;
}

Outcome distance_identities() {
  Outcome o;
  Rng rng(1006);
  const auto norms = test_norms(rng);
  for (int i = 0; i < 50; ++i) {
    const PolyhedralNorm& norm = norms[i % norms.size()];
    const ConvexPolygon a = rng.polygon(1, 8);
    const Scalar r = rng.scalar(0, 3) + rational(1, 16);
    const ConvexPolygon n = neighborhood(a, r, norm);
    for (const Segment& e : n.edges()) {
      if (point_distance(e.a, a, norm).distance != r) o.fail("boundary vertex off distance, case " + std::to_string(i));
      if (point_distance(lerp(e.a, e.b, rational(1, 2)), a, norm).distance != r) {
        o.fail("boundary midpoint off distance, case " + std::to_string(i));
      }
    }
  }
  for (int i = 0; i < 500; ++i) {
    const PolyhedralNorm& norm = norms[i % norms.size()];
    const ConvexPolygon a = rng.polygon(1, 8);
    const Point x = rng.point(-6, 6), y = rng.point(-6, 6);
    const Scalar dx = point_distance(x, a, norm).distance, dy = point_distance(y, a, norm).distance;
    if (abs(dx - dy) > gauge(norm, x - y)) o.fail("1-Lipschitz, pair " + std::to_string(i));
  }
  int exterior = 0;
  for (int i = 0; exterior < 100; ++i) {
    const PolyhedralNorm& norm = norms[i % norms.size()];
    const ConvexPolygon a = rng.polygon(1, 8);
    const Point x = rng.point(-6, 6);
    if (contains_closed(a, x)) continue;
    ++exterior;
    const DistanceWitness w = point_distance(x, a, norm);
    for (int lambda : {1, 2, 3}) {
      const Point z = lerp(w.projection_point, x, Scalar(lambda));
      if (point_distance(z, a, norm).distance != lambda * w.distance) {
        o.fail("ray distance, point " + std::to_string(exterior) + " lambda " + std::to_string(lambda));
      }
    }
  }
  return o;
}

Outcome monotonicity() {
  Outcome o;
  Rng rng(1007);
  const auto norms = test_norms(rng);
  for (int i = 0; i < 50; ++i) {
    const PolyhedralNorm& norm = norms[i % norms.size()];
    const ConvexPolygon a = rng.polygon(3, 8, 3), b = rng.polygon(3, 8, 3);
    const Scalar d = set_distance(a, b, norm);
    for (int j = 0; j < 5; ++j) {
      const Scalar r = d + rng.scalar(0, 3);
      const Scalar r2 = r + rng.scalar(0, 3);
      if (!subset_of(f_eval(a, b, r, norm), f_eval(a, b, r2, norm))) {
        o.fail("instance " + std::to_string(i) + " pair " + std::to_string(j));
      }
    }
  }
  return o;
}

struct CliOutput {
  int code;
  std::string out, err, file;
};

CliOutput run_tool(const std::vector<std::string>& args, const std::filesystem::path& file) {
  std::filesystem::remove(file);
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  std::ifstream in(file, std::ios::binary);
  std::string contents{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return {code, out.str(), err.str(), std::move(contents)};
}

Outcome cli_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "hlab_acceptance";
  std::filesystem::create_directories(dir);
  const auto svg = dir / "out.svg";
  std::vector<std::filesystem::path> scenes;
  for (const auto& entry : std::filesystem::directory_iterator(HLAB_SCENE_DIR)) {
    if (entry.path().extension() == ".json") scenes.push_back(entry.path());
  }
  std::sort(scenes.begin(), scenes.end());
  if (scenes.empty()) o.fail("no shipped scenes");

  std::vector<std::vector<std::string>> commands;
  for (const auto& path : scenes) {
    const std::string s = path.string();
    commands.push_back({"eval", s});
    commands.push_back({"witness", s, "--side", "left"});
    commands.push_back({"witness", s, "--side", "right"});
    commands.push_back({"scan", s, "--steps", "8", "--svg", svg.string()});
    commands.push_back({"oracle", s, "--step", "1/8"});
    commands.push_back({"canon", s});
  }
  commands.push_back({"scenario", "figure1", "--svg", svg.string()});
  commands.push_back({"scenario", "figure2", "--svg", svg.string()});
  for (const auto& args : commands) {
    const CliOutput first = run_tool(args, svg);
    const CliOutput second = run_tool(args, svg);
    if (first.code != second.code || first.out != second.out || first.err != second.err || first.file != second.file) {
      o.fail("nondeterministic: " + args[0] + " " + args[1]);
    }
  }

  for (const auto& path : scenes) {
    const auto saved = dir / "saved.json";
    std::ofstream(saved) << dump(scene_to_json(load_scene_file(path.string())));
    std::ifstream in(saved, std::ios::binary);
    const std::string first{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const std::string second = dump(scene_to_json(load_scene_file(saved.string())));
    if (first != second) o.fail("round trip not a fixed point: " + path.filename().string());
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  report(1, "continuity witnesses on 50 pairs x 3 norms x 3 eps x 3 radii", continuity_witnesses, 300);
  report(2, "slanted-exit certificate: max ratio 8, every ratio > 1", figure1, 1);
  report(3, "non-convex jump certificate: gaps >= 4, convex control <= 2 delta", figure2, 1);
  report(4, "grid oracle brackets exact Hausdorff at step 1/64", oracle_equivalence);
  report(5, "metric, semigroup and support additivity axioms", axioms);
  report(6, "boundary distance, 1-Lipschitz and projection ray identities", distance_identities);
  report(7, "monotonicity of f in r", monotonicity);
  report(8, "CLI determinism and scene round trip", cli_determinism);
  return failures;
}
