#include "hlab/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hlab/error.hpp"
#include "hlab/scene_io.hpp"
#include "hlab/svg.hpp"

namespace hlab {

using nlohmann::json;

namespace {

constexpr int kSvgWidth = 800;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write \"" + path + "\"");
  file << content;
}

json report_json(const ModulusReport& report) {
  json out;
  out["applicable"] = report.applicable;
  if (!report.note.empty()) out["note"] = report.note;
  json samples = json::array();
  json gaps = json::array();
  for (const Scalar& r : report.r_prime) samples.push_back(to_json(r));
  for (const Scalar& g : report.gaps) gaps.push_back(to_json(g));
  out["r_prime"] = std::move(samples);
  out["d_H"] = std::move(gaps);
  out["all_passed"] = report.all_passed;
  out["worst_gap"] = to_json(report.worst_gap);
  return out;
}

json rows_json(const std::vector<ScanRow>& rows) {
  json out = json::array();
  for (const ScanRow& row : rows) {
    out.push_back({{"r", to_json(row.r)},
                   {"r_next", to_json(row.r_next)},
                   {"d_H", to_json(row.gap)},
                   {"ratio", to_json(row.ratio)}});
  }
  return out;
}

json components_json(const std::vector<ConvexPolygon>& parts) {
  json out = json::array();
  for (const ConvexPolygon& part : parts) out.push_back(json{{"vertices", to_json(part)}});
  return out;
}

const Scalar& need(const std::optional<Scalar>& value, const char* key) {
  if (!value) throw InputError(std::string("missing key \"") + key + "\"");
  return *value;
}

const ConvexPolygon& convex_b(const Scene& scene, const char* command) {
  if (scene.b_parts.size() != 1) {
    throw InputError(std::string(command) + " requires a convex \"B\" (a single part)");
  }
  return scene.b_parts.front();
}

// --- eval -------------------------------------------------------------------

int cmd_eval(const std::string& path, const std::optional<std::string>& r_text, std::ostream& out) {
  const Scene scene = load_scene_file(path);
  const Scalar r = r_text ? parse_scalar(*r_text) : need(scene.r, "r");
  const PolyhedralNorm norm = scene.norm.resolve();
  json doc;
  doc["r"] = to_json(r);
  if (scene.b_parts.size() == 1) {
    doc["vertices"] = to_json(f_eval(scene.a, scene.b_parts.front(), r, norm));
  } else {
    doc["components"] = components_json(f_union_eval(scene.a, scene.b_parts, r, norm));
  }
  out << dump(doc);
  return kExitOk;
}

// --- witness ----------------------------------------------------------------

int cmd_witness(const std::string& path, const std::string& side, std::ostream& out) {
  const Scene scene = load_scene_file(path);
  const Scalar& r = need(scene.r, "r");
  const Scalar& epsilon = need(scene.epsilon, "epsilon");
  const ConvexPolygon& b = convex_b(scene, "witness");
  const PolyhedralNorm norm = scene.norm.resolve();

  json doc;
  doc["side"] = side;
  doc["r"] = to_json(r);
  doc["epsilon"] = to_json(epsilon);
  if (side == "left") {
    // Surfaces the domain error before any sampling.
    const LeftWitness w = delta_left(scene.a, b, r, epsilon, norm);
    const ModulusCheck check = verify_modulus(scene.a, b, r, epsilon, norm);
    doc["delta"] = to_json(w.delta);
    doc["M"] = to_json(w.m);
    doc["p"] = to_json(w.p);
    doc["L"] = to_json(w.l);
    doc["lambda"] = to_json(w.lambda);
    doc["gM"] = to_json(w.gm);
    doc["verification"] = report_json(check.left_report);
  } else {
    const ModulusCheck check = verify_modulus(scene.a, b, r, epsilon, norm);
    const RightWitness& w = check.right;
    doc["delta"] = w.delta ? to_json(*w.delta) : json("inf");
    doc["M"] = to_json(w.m);
    json k = json::array();
    for (const Segment& s : w.k) k.push_back(to_json(s));
    doc["K"] = std::move(k);
    doc["verification"] = report_json(check.right_report);
  }
  out << dump(doc);
  return kExitOk;
}

// --- scan -------------------------------------------------------------------

std::string scan_svg(const std::vector<ScanRow>& rows, const Scalar& r_lo, const Scalar& r_hi, const std::string& title) {
  Scalar top = 1;
  for (const ScanRow& row : rows) {
    if (row.ratio > top) top = row.ratio;
  }
  // Plot in a unit frame: x = (r - r_lo) / (r_hi - r_lo), y = ratio / top * 2/3.
  const Scalar x_span = r_hi - r_lo;
  const Scalar y_scale = rational(2, 3) / top;
  SvgDocument svg({rational(-1, 10), rational(-1, 10)}, {rational(11, 10), rational(8, 10)}, kSvgWidth, title);
  svg.polyline({{0, 0}, {1, 0}}, "stroke:black;fill:none");
  svg.polyline({{0, 0}, {0, rational(7, 10)}}, "stroke:black;fill:none");
  svg.polyline({{0, y_scale}, {1, y_scale}}, "stroke:gray;stroke-dasharray:4,4;fill:none");
  svg.text({rational(1, 100), y_scale + rational(1, 100)}, "ratio 1");
  std::vector<Point> curve;
  for (const ScanRow& row : rows) curve.push_back({(row.r - r_lo) / x_span, row.ratio * y_scale});
  svg.polyline(curve, "stroke:crimson;stroke-width:2;fill:none");
  svg.text({0, rational(-6, 100)}, "r = " + to_string(r_lo));
  svg.text({rational(9, 10), rational(-6, 100)}, "r = " + to_string(r_hi));
  svg.text({rational(1, 100), rational(72, 100)}, "max ratio " + to_string(top));
  return svg.str();
}

int cmd_scan(const std::string& path, int steps, const std::optional<std::string>& svg_path, std::ostream& out) {
  if (steps < 1) throw InputError("steps must be ≥ 1");
  const Scene scene = load_scene_file(path);
  if (!scene.r_range) throw InputError("missing key \"r_range\"");
  const auto& [r_lo, r_hi] = *scene.r_range;
  const PolyhedralNorm norm = scene.norm.resolve();

  std::vector<ScanRow> rows;
  if (scene.b_parts.size() == 1) {
    rows = modulus_scan(scene.a, scene.b_parts.front(), norm, r_lo, r_hi, steps);
  } else {
    if (r_hi <= r_lo) throw InputError("r_range must be increasing");
    const Scalar h = (r_hi - r_lo) / steps;
    for (int i = 0; i < steps; ++i) {
      Scalar r = r_lo + h * i;
      Scalar next = r + h;
      Scalar gap = hausdorff_union(f_union_eval(scene.a, scene.b_parts, r, norm),
                                   f_union_eval(scene.a, scene.b_parts, next, norm), norm);
      Scalar ratio = gap / h;
      rows.push_back({std::move(r), std::move(next), std::move(gap), std::move(ratio)});
    }
  }

  out << "r,r_next,d_H,ratio\n";
  for (const ScanRow& row : rows) {
    out << to_string(row.r) << ',' << to_string(row.r_next) << ',' << to_string(row.gap) << ','
        << to_string(row.ratio) << '\n';
  }
  if (svg_path) write_file(*svg_path, scan_svg(rows, r_lo, r_hi, scene.label.empty() ? "modulus scan" : scene.label));
  return kExitOk;
}

// --- scenario ---------------------------------------------------------------

constexpr const char* kFillA = "fill:#3366cc;fill-opacity:0.35;stroke:#3366cc;stroke-width:2";
constexpr const char* kOutlineB = "fill:none;stroke:black;stroke-width:1.5";
constexpr const char* kBall = "fill:none;stroke:#cc3333;stroke-dasharray:6,4";
constexpr const char* kShadeF = "fill:#33aa55;fill-opacity:0.5;stroke:#33aa55";

std::string figure1_svg(const Figure1Report& report) {
  const PolyhedralNorm norm = report.scene.norm.resolve();
  const Scalar& r = *report.scene.r;
  const ConvexPolygon& b = report.scene.b_parts.front();
  const ConvexPolygon ball = neighborhood(report.scene.a, r, norm);
  const ConvexPolygon fr = f_eval(report.scene.a, b, r, norm);
  const ConvexPolygon fr_next = f_eval(report.scene.a, b, r + report.h * 8, norm);
  const auto [lo, hi] = bounding_box({ball, b}, rational(1, 2));
  SvgDocument svg(lo, hi, kSvgWidth, "f(r) = B_r(A) ∩ B, r = " + to_string(r));
  svg.polygon(fr_next, "fill:#ffaa00;fill-opacity:0.35;stroke:#ffaa00");
  svg.polygon(fr, kShadeF);
  svg.polygon(ball, kBall);
  svg.polygon(b, kOutlineB);
  svg.polygon(report.scene.a, kFillA);
  svg.text({lo.x + rational(1, 4), hi.y - rational(1, 4)}, "max d_H / h = " + to_string(report.max_ratio));
  return svg.str();
}

std::string figure2_svg(const Figure2Report& report) {
  const PolyhedralNorm norm = report.scene.norm.resolve();
  const Scalar& rho = report.jump.rho;
  const ConvexPolygon ball = neighborhood(report.scene.a, rho, norm);
  const auto parts = f_union_eval(report.scene.a, report.scene.b_parts, rho, norm);
  std::vector<ConvexPolygon> all = report.scene.b_parts;
  all.push_back(ball);
  const auto [lo, hi] = bounding_box(all, rational(1, 2));
  SvgDocument svg(lo, hi, kSvgWidth, "f jumps at r = " + to_string(rho));
  for (const ConvexPolygon& part : parts) svg.polygon(part, kShadeF);
  svg.polygon(ball, kBall);
  for (const ConvexPolygon& part : report.scene.b_parts) svg.polygon(part, kOutlineB);
  svg.polygon(report.scene.a, kFillA);
  svg.text({lo.x + rational(1, 4), hi.y - rational(1, 4)}, "jump >= " + to_string(report.jump.jump_lower_bound));
  return svg.str();
}

int cmd_scenario(const std::string& name, const std::optional<std::string>& svg_path,
                 const std::optional<std::string>& scene_path, std::ostream& out) {
  json doc;
  doc["scenario"] = name;
  if (name == "figure1") {
    const Figure1Report report = figure1_scenario();
    doc["norm"] = "linf";
    doc["h"] = to_json(report.h);
    doc["rows"] = rows_json(report.rows);
    doc["max_ratio"] = to_json(report.max_ratio);
    doc["certified_strictly_greater_than_one"] = report.certified_strictly_greater_than_one;
    doc["saturated_rows"] = rows_json(report.saturated_rows);
    doc["saturated_max_ratio"] = to_json(report.saturated_max_ratio);
    if (svg_path) write_file(*svg_path, figure1_svg(report));
    if (scene_path) write_file(*scene_path, dump(scene_to_json(report.scene)));
  } else if (name == "figure2") {
    const Figure2Report report = figure2_scenario();
    doc["norm"] = "linf";
    doc["rho"] = to_json(report.jump.rho);
    json deltas = json::array();
    json gaps = json::array();
    json control = json::array();
    for (const Scalar& d : report.jump.deltas) deltas.push_back(to_json(d));
    for (const Scalar& g : report.jump.gaps) gaps.push_back(to_json(g));
    for (const Scalar& g : report.control_gaps) control.push_back(to_json(g));
    doc["deltas"] = std::move(deltas);
    doc["gaps"] = std::move(gaps);
    doc["jump_lower_bound"] = to_json(report.jump.jump_lower_bound);
    doc["certified_discontinuity"] = report.certified_discontinuity;
    doc["control"] = {{"B", to_json(report.control_scene.b_parts.front())},
                      {"gaps", std::move(control)},
                      {"max_gap_over_delta", to_json(report.control_max_gap_over_delta)}};
    if (svg_path) write_file(*svg_path, figure2_svg(report));
    if (scene_path) write_file(*scene_path, dump(scene_to_json(report.scene)));
  } else {
    throw InputError("unknown scenario \"" + name + "\"; available: figure1, figure2");
  }
  out << dump(doc);
  return kExitOk;
}

// --- oracle / canon ---------------------------------------------------------

int cmd_oracle(const std::string& path, const std::string& step_text, std::ostream& out) {
  const Scene scene = load_scene_file(path);
  const Scalar step = parse_scalar(step_text);
  const PolyhedralNorm norm = scene.norm.resolve();
  const std::vector<ConvexPolygon> a{scene.a};
  const OracleInterval interval = grid_oracle_hausdorff(a, scene.b_parts, norm, step);
  const Scalar exact = hausdorff_union(a, scene.b_parts, norm);
  json doc;
  doc["sets"] = "A, B";
  doc["step"] = to_json(step);
  doc["lo"] = to_json(interval.lo);
  doc["hi"] = to_json(interval.hi);
  doc["grid_estimate"] = to_json(interval.estimate);
  doc["cell_diameter"] = to_json(interval.cell_diameter);
  doc["samples"] = interval.samples;
  doc["exact"] = to_json(exact);
  doc["bracketed"] = interval.contains(exact);
  out << dump(doc);
  return kExitOk;
}

int cmd_canon(const std::string& path, std::ostream& out) {
  out << dump(scene_to_json(load_scene_file(path)));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hlab: exact continuity lab for f(r) = B_r(A) ∩ B under polyhedral norms", "hlab"};
  app.require_subcommand(1);

  std::string scene_path;
  std::optional<std::string> r_text;
  std::string side;
  int steps = 0;
  std::optional<std::string> svg_path;
  std::optional<std::string> export_path;
  std::string scenario_name;
  std::string step_text;

  auto* eval = app.add_subcommand("eval", "Evaluate f(r) for a scene");
  eval->add_option("scene", scene_path, "Scene JSON file")->required();
  eval->add_option("--r", r_text, "Radius p/q (defaults to the scene's \"r\")");

  auto* witness = app.add_subcommand("witness", "Continuity witness delta for the scene's r and epsilon");
  witness->add_option("scene", scene_path, "Scene JSON file")->required();
  witness->add_option("--side", side, "left or right")->required()->check(CLI::IsMember({"left", "right"}));

  auto* scan = app.add_subcommand("scan", "Tabulate d_H(f(r), f(r+h)) over the scene's r_range");
  scan->add_option("scene", scene_path, "Scene JSON file")->required();
  scan->add_option("--steps", steps, "Number of radius steps")->required();
  scan->add_option("--svg", svg_path, "Write a ratio plot");

  auto* scenario = app.add_subcommand("scenario", "Run a built-in scenario: figure1 or figure2");
  scenario->add_option("name", scenario_name, "figure1 | figure2")->required();
  scenario->add_option("--svg", svg_path, "Write a drawing of the scene");
  scenario->add_option("--scene", export_path, "Export the scene JSON");

  auto* oracle = app.add_subcommand("oracle", "Grid-sampled bracket of d_H(A, B) against the exact value");
  oracle->add_option("scene", scene_path, "Scene JSON file")->required();
  oracle->add_option("--step", step_text, "Grid step p/q")->required();

  auto* canon = app.add_subcommand("canon", "Print the scene in canonical form");
  canon->add_option("scene", scene_path, "Scene JSON file")->required();

  std::vector<const char*> argv{"hlab"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hlab: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*eval) return cmd_eval(scene_path, r_text, out);
    if (*witness) return cmd_witness(scene_path, side, out);
    if (*scan) return cmd_scan(scene_path, steps, svg_path, out);
    if (*scenario) return cmd_scenario(scenario_name, svg_path, export_path, out);
    if (*oracle) return cmd_oracle(scene_path, step_text, out);
    if (*canon) return cmd_canon(scene_path, out);
  } catch (const InputError& e) {
    err << "hlab: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "hlab: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitInput;
}

}  // namespace hlab
