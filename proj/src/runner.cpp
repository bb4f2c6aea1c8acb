#include "mirrortomo/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "mirrortomo/errors.hpp"

namespace mtomo {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt17(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.dim; ++i) a.push_back(v[i]);
  return a;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::bad_configuration, "cannot write '" + p.string() + "'");
  out << content;
}

fs::path prepare_dir(const std::string& out_dir) {
  require(!out_dir.empty(), errc::bad_parameters, "output directory must not be empty");
  fs::path p(out_dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) fail(errc::bad_configuration, "cannot create '" + out_dir + "': " + ec.message());
  return p;
}

// Timings are diagnostics only: they go to stderr so that report files stay
// byte-identical across reruns.
class Stopwatch {
public:
  explicit Stopwatch(const char* label) : label_(label) {}
  ~Stopwatch() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::fprintf(stderr, "[mtomo] %s: %.3f s\n", label_, s);
  }

private:
  const char* label_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::CONSISTENT: return 0;
    case Verdict::HYPOTHESIS_FAILS: return 2;
    case Verdict::INCONSISTENT_WITNESS: return 3;
  }
  return 3;
}

json theorem_json(const TheoremReport& rep) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["n_lines"] = rep.lines.size();
  j["n_pass"] = rep.n_pass;
  j["n_fail"] = rep.n_fail;
  j["n_skipped"] = rep.n_skipped;
  j["hypothesis_pass_rate"] = rep.hypothesis_pass_rate;
  j["conclusion_distance"] = rep.conclusion_distance;
  j["point_check"] = rep.point_check;
  j["mirror_tol_abs"] = rep.mirror_tol_abs;
  j["conclusion_tol_abs"] = rep.conclusion_tol_abs;
  j["replaced_k2"] = rep.replaced_k2;
  json sigma;
  sigma["exists"] = rep.sigma_exists;
  if (rep.sigma_exists) {
    sigma["point"] = vec_json(rep.sigma);
    sigma["dist_p1"] = rep.dist_p1_sigma;
    sigma["dist_p2"] = rep.dist_p2_sigma;
  }
  j["sigma"] = sigma;
  return j;
}

std::string lines_csv(const TheoremReport& rep) {
  std::string out =
      "index,provenance,base_x,base_y,base_z,dir_x,dir_y,dir_z,status,best_distance,area_k1,"
      "area_k2\n";
  for (size_t i = 0; i < rep.lines.size(); ++i) {
    const MirrorTestResult& r = rep.lines[i];
    out += std::to_string(i) + "," + r.line.provenance;
    for (int c = 0; c < 3; ++c) out += "," + fmt17(r.line.m.base[c]);
    for (int c = 0; c < 3; ++c) out += "," + fmt17(r.line.m.dir[c]);
    out += std::string(",") + line_status_name(r.status);
    if (r.status == LineStatus::SKIPPED_EMPTY) {
      out += ",,,";
    } else {
      double best = r.distances.empty() ? 0.0 : *std::min_element(r.distances.begin(), r.distances.end());
      out += "," + fmt17(best) + "," + fmt17(r.section_areas[0]) + "," + fmt17(r.section_areas[1]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

RunOutcome run_verify(const ScenarioDoc& doc, const std::string& out_dir) {
  Stopwatch sw("verify");
  require(doc.scenario.k1.dim == 3, errc::bad_configuration,
          "verify expects a 3D scenario; 4D files go through project");
  fs::path dir = prepare_dir(out_dir);

  TheoremReport rep = verify_theorem(doc.scenario);

  json j;
  j["schema_version"] = 1;
  j["command"] = "verify";
  j["scenario"] = json::parse(doc.echo);
  j["result"] = theorem_json(rep);
  write_file(dir / "report.json", j.dump(2) + "\n");
  write_file(dir / "lines.csv", lines_csv(rep));
  return {exit_for(rep.verdict)};
}

RunOutcome run_project(const ScenarioDoc& doc, const Vec& gamma_normal, double gamma_offset,
                       const std::string& out_dir) {
  Stopwatch sw("project");
  require(doc.scenario.k1.dim == 4, errc::bad_configuration, "project expects a 4D scenario");
  require(gamma_normal.dim == 4, errc::bad_parameters, "gamma normal needs 4 components");
  fs::path dir = prepare_dir(out_dir);

  Hyperplane gamma(gamma_normal, gamma_offset);
  Scenario s3 = projection_reduction(doc.scenario, gamma);
  TheoremReport rep = verify_theorem(s3);

  int n_dirs = 50;
  double scale = std::max(s3.k1.diameter(), s3.k2.diameter());
  ProjectionSymmetryReport proj =
      projection_symmetry_check(s3.k1, s3.k2, s3.h, n_dirs, s3.mirror_tol * scale);

  json j;
  j["schema_version"] = 1;
  j["command"] = "project";
  j["scenario"] = json::parse(doc.echo);
  j["gamma"] = {{"normal", vec_json(gamma.normal)}, {"offset", gamma.offset}};
  j["result"] = theorem_json(rep);
  json ps;
  ps["passed"] = proj.passed;
  ps["n_dirs"] = n_dirs;
  ps["worst_distance"] = proj.worst_distance;
  ps["body_distance"] = proj.body_distance;
  ps["co_occurrence_ok"] = proj.co_occurrence_ok;
  j["projection_symmetry"] = ps;
  write_file(dir / "report.json", j.dump(2) + "\n");
  write_file(dir / "lines.csv", lines_csv(rep));

  std::string csv = "angle,hausdorff\n";
  for (int i = 0; i < n_dirs; ++i)
    csv += fmt17(std::numbers::pi * i / n_dirs) + "," + fmt17(proj.distances[i]) + "\n";
  write_file(dir / "projections.csv", csv);
  return {exit_for(rep.verdict)};
}

RunOutcome run_sphere_lemmas(const SphereLemmaParams& params, const std::string& out_dir) {
  Stopwatch sw("sphere-lemmas");
  require(params.r > 0.0, errc::bad_parameters, "r must be positive");
  require(!params.x0_grid.empty(), errc::bad_parameters, "x0 grid must not be empty");
  require(!params.k_grid.empty(), errc::bad_parameters, "k grid must not be empty");
  fs::path dir = prepare_dir(out_dir);

  bool all_positive = true;
  json cells = json::array();
  for (double x0 : params.x0_grid) {
    for (double k : params.k_grid) {
      SphereOffsetResult res = sphere_offset_counterexample(params.r, x0, k, 0);
      json cell;
      cell["x0"] = x0;
      cell["k"] = k;
      cell["a"] = res.a;
      cell["a_k"] = res.a_k;
      cell["margin"] = res.margin;
      cell["margin_positive"] = res.margin > 0.0;
      cells.push_back(cell);
      all_positive = all_positive && res.margin > 0.0;
    }
  }

  double r = params.r;
  bool searches_ok = true;
  json sweep = json::array();
  Vec q1(0.0, 0.0, 0.3 * r);
  Hyperplane h0(Vec(0.0, 0.0, 1.0), -0.8 * r);
  for (double z2 : {-0.5 * r, -0.3 * r}) {
    Vec q2(0.0, 0.0, z2);
    BallSearchResult br = ball_unequal_distance_search(r, q1, q2, h0);
    json entry;
    entry["q1"] = vec_json(q1);
    entry["q2"] = vec_json(q2);
    entry["h0_offset"] = h0.offset;
    entry["symmetric"] = br.symmetric;
    entry["found"] = br.found;
    entry["outcome"] = br.symmetric ? "NoWitness-symmetric" : (br.found ? "Witness" : "NoWitness");
    entry["a1"] = br.a1;
    entry["a2"] = br.a2;
    entry["best_mismatch"] = br.best_mismatch;
    entry["axis_mismatch"] = br.axis_mismatch;
    entry["n_scanned"] = br.n_scanned;
    if (br.witness) {
      entry["witness_provenance"] = br.witness->provenance;
      entry["witness_base"] = vec_json(br.witness->m.base);
      entry["witness_dir"] = vec_json(br.witness->m.dir);
    }
    sweep.push_back(entry);
    searches_ok = searches_ok && (br.symmetric || br.found);
  }

  json j;
  j["schema_version"] = 1;
  j["command"] = "sphere-lemmas";
  j["r"] = r;
  j["offset_grid"] = cells;
  j["all_margins_positive"] = all_positive;
  j["distance_search"] = sweep;
  j["note"] =
      "section area of a ball at plane distance d is pi*(r^2 - d^2); the through-center disc "
      "has area pi*r^2";
  write_file(dir / "sphere_lemmas.json", j.dump(2) + "\n");
  return {all_positive && searches_ok ? 0 : 2};
}

RunOutcome run_circle_char(const PolygonDoc& doc, const CircleCharParams& params,
                           const std::string& out_dir) {
  Stopwatch sw("circle-char");
  require(params.n_dirs >= 1, errc::bad_parameters, "need at least one direction");
  require(params.n_steps >= 1, errc::bad_parameters, "need at least one orbit step");
  fs::path dir = prepare_dir(out_dir);

  const Polygon2& poly = doc.poly;
  Vec c = centroid(poly.verts);
  double rmax = 0.0;
  for (const Vec& v : poly.verts) rmax = std::max(rmax, distance(v, c));
  double tol = 2.0 * (1.0 - std::cos(std::numbers::pi / static_cast<double>(poly.size()))) * rmax;

  RectangleVerdict scan = inscribed_rectangle_scan(poly, params.a, params.b, params.n_dirs, tol);

  std::string csv = "angle,chord_a_len,chord_b_len,ortho_residual,corner_residual\n";
  int n_fail_rows = 0;
  double max_len = 0.0, max_ortho = 0.0, max_corner = 0.0;
  for (size_t i = 0; i < scan.records.size(); ++i) {
    const RectangleRecord& rec = scan.records[i];
    double angle = std::numbers::pi * static_cast<double>(i) / params.n_dirs;
    csv += fmt17(angle) + "," + fmt17(rec.chord_a.length()) + "," + fmt17(rec.chord_b.length()) +
           "," + fmt17(rec.ortho_residual) + "," + fmt17(rec.corner_residual) + "\n";
    if (!rec.passed) ++n_fail_rows;
    max_len = std::max(max_len, rec.length_mismatch);
    max_ortho = std::max(max_ortho, rec.ortho_residual);
    max_corner = std::max(max_corner, rec.corner_residual);
  }
  write_file(dir / "circle_char.csv", csv);

  // The orbit runs even when the scan already failed; a breakdown after a
  // failed scan is part of the negative evidence, not an input error.
  json orbit_info;
  std::string orbit_csv = "step,c_x,c_y,dist_to_limit\n";
  double rad = params.start_angle_deg * std::numbers::pi / 180.0;
  try {
    RectangleOrbit orbit =
        iterate_rectangles(poly, params.a, params.b, Vec(std::cos(rad), std::sin(rad)),
                           params.n_steps);
    Chord limit = chord(poly, params.a, params.b - params.a);
    double final_dist = 0.0;
    for (size_t i = 0; i < orbit.steps.size(); ++i) {
      const Vec& cn = orbit.steps[i].c;
      final_dist = std::min(distance(cn, limit.a), distance(cn, limit.b));
      orbit_csv += std::to_string(i) + "," + fmt17(cn[0]) + "," + fmt17(cn[1]) + "," +
                   fmt17(final_dist) + "\n";
    }
    bool converged =
        orbit.steps.size() >= 2 &&
        distance(orbit.steps.back().c, orbit.steps[orbit.steps.size() - 2].c) < 1e-9;
    orbit_info["circum_center"] = vec_json(orbit.circum_center);
    orbit_info["circum_radius"] = orbit.circum_radius;
    orbit_info["n_steps"] = orbit.steps.size() - 1;
    orbit_info["converged"] = converged;
    orbit_info["final_dist_to_limit"] = final_dist;
  } catch (const Error& e) {
    if (scan.passed) throw;
    orbit_info["error"] = e.what();
  }
  write_file(dir / "rectangle_orbit.csv", orbit_csv);

  json j;
  j["schema_version"] = 1;
  j["command"] = "circle-char";
  j["polygon"] = json::parse(doc.echo);
  j["a"] = vec_json(params.a);
  j["b"] = vec_json(params.b);
  j["n_dirs"] = params.n_dirs;
  j["tol"] = tol;
  j["passed"] = scan.passed;
  j["n_fail_rows"] = n_fail_rows;
  j["max_length_mismatch"] = max_len;
  j["max_ortho_residual"] = max_ortho;
  j["max_corner_residual"] = max_corner;
  j["orbit"] = orbit_info;
  write_file(dir / "report.json", j.dump(2) + "\n");
  return {scan.passed ? 0 : 2};
}

}  // namespace mtomo
