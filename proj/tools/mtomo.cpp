#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mirrortomo.h"

namespace {

int report_failure(mt_status st) {
  std::fprintf(stderr, "mtomo: %s: %s\n", mt_status_name(st), mt_last_error());
  return 1;
}

bool parse_tuple(const std::string& s, double* out, int n) {
  const char* p = s.c_str();
  char* end = nullptr;
  for (int i = 0; i < n; ++i) {
    out[i] = std::strtod(p, &end);
    if (end == p) return false;
    p = end;
    if (i + 1 < n) {
      if (*p != ',') return false;
      ++p;
    }
  }
  return *p == '\0';
}

int cmd_verify(const std::string& path, const std::string& out_dir) {
  mt_scenario* sc = nullptr;
  mt_status st = mt_scenario_load_file(path.c_str(), &sc);
  if (st != MT_OK) return report_failure(st);
  int code = 1;
  st = mt_run_verify(sc, out_dir.c_str(), &code);
  mt_scenario_free(sc);
  return st == MT_OK ? code : report_failure(st);
}

int cmd_project(const std::string& path, const std::string& normal_spec, double offset,
                const std::string& out_dir) {
  double n[4];
  if (!parse_tuple(normal_spec, n, 4)) {
    std::fprintf(stderr, "mtomo: --gamma-normal wants four comma-separated numbers\n");
    return 1;
  }
  mt_scenario* sc = nullptr;
  mt_status st = mt_scenario_load_file(path.c_str(), &sc);
  if (st != MT_OK) return report_failure(st);
  int code = 1;
  st = mt_run_project(sc, n, offset, out_dir.c_str(), &code);
  mt_scenario_free(sc);
  return st == MT_OK ? code : report_failure(st);
}

int cmd_sphere_lemmas(double r, const std::vector<double>& x0_grid,
                      const std::vector<double>& k_grid, const std::string& out_dir) {
  mt_sphere_lemma_params params{};
  params.r = r;
  params.x0_grid = x0_grid.data();
  params.n_x0 = x0_grid.size();
  params.k_grid = k_grid.data();
  params.n_k = k_grid.size();
  int code = 1;
  mt_status st = mt_run_sphere_lemmas(&params, out_dir.c_str(), &code);
  return st == MT_OK ? code : report_failure(st);
}

int cmd_circle_char(const std::string& path, const std::string& a_spec, const std::string& b_spec,
                    int n_dirs, int n_steps, double start_angle, const std::string& out_dir) {
  double a[2], b[2];
  if (!parse_tuple(a_spec, a, 2) || !parse_tuple(b_spec, b, 2)) {
    std::fprintf(stderr, "mtomo: --a and --b want two comma-separated numbers each\n");
    return 1;
  }
  mt_polygon* poly = nullptr;
  mt_status st = mt_polygon_load_file(path.c_str(), &poly);
  if (st != MT_OK) return report_failure(st);
  mt_circle_char_params params{};
  params.ax = a[0];
  params.ay = a[1];
  params.bx = b[0];
  params.by = b[1];
  params.n_dirs = n_dirs;
  params.n_steps = n_steps;
  params.start_angle_deg = start_angle;
  int code = 1;
  st = mt_run_circle_char(poly, &params, out_dir.c_str(), &code);
  mt_polygon_free(poly);
  return st == MT_OK ? code : report_failure(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-body mirror symmetry toolkit: section tests, projection checks, and "
               "planar circle characterization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mt_version());

  std::string v_path, v_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "Mirror-test all sampled sections of a 3D scenario and check the conclusion");
  verify->add_option("scenario", v_path, "Scenario JSON file")->required();
  verify->add_option("--out", v_out, "Output directory")->required();

  std::string pj_path, pj_out, pj_normal = "0,0,0,1";
  double pj_offset = 0.0;
  CLI::App* project = app.add_subcommand(
      "project", "Reduce a 4D scenario along a hyperplane, then verify the 3D result");
  project->add_option("scenario", pj_path, "4D scenario JSON file")->required();
  project->add_option("--gamma-normal", pj_normal, "Projection hyperplane normal as a,b,c,d")
      ->capture_default_str();
  project->add_option("--gamma-offset", pj_offset, "Projection hyperplane offset")
      ->capture_default_str();
  project->add_option("--out", pj_out, "Output directory")->required();

  double sl_r = 1.0;
  std::vector<double> sl_x0{0.25, 0.5, 0.75};
  std::vector<double> sl_k{0.1, 0.5, 2.0};
  std::string sl_out;
  CLI::App* lemmas = app.add_subcommand(
      "sphere-lemmas", "Section-area margins for off-center points in a ball, plus the "
                       "unequal-distance line search");
  lemmas->add_option("--r", sl_r, "Ball radius")->capture_default_str();
  lemmas->add_option("--x0-grid", sl_x0, "Off-center offsets, comma separated")->delimiter(',');
  lemmas->add_option("--k-grid", sl_k, "Cut depths, comma separated")->delimiter(',');
  lemmas->add_option("--out", sl_out, "Output directory")->required();

  std::string cc_path, cc_out, cc_a, cc_b;
  int cc_dirs = 128, cc_steps = 50;
  double cc_angle = 60.0;
  CLI::App* circle = app.add_subcommand(
      "circle-char", "Inscribed-rectangle scan and corner-chasing orbit for a convex polygon");
  circle->add_option("polygon", cc_path, "Polygon JSON file")->required();
  circle->add_option("--a", cc_a, "First base point as x,y")->required();
  circle->add_option("--b", cc_b, "Second base point as x,y")->required();
  circle->add_option("--dirs", cc_dirs, "Number of scan directions")->capture_default_str();
  circle->add_option("--steps", cc_steps, "Orbit step budget")->capture_default_str();
  circle->add_option("--start-angle", cc_angle, "Starting chord angle in degrees")
      ->capture_default_str();
  circle->add_option("--out", cc_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (verify->parsed()) return cmd_verify(v_path, v_out);
  if (project->parsed()) return cmd_project(pj_path, pj_normal, pj_offset, pj_out);
  if (lemmas->parsed()) return cmd_sphere_lemmas(sl_r, sl_x0, sl_k, sl_out);
  if (circle->parsed())
    return cmd_circle_char(cc_path, cc_a, cc_b, cc_dirs, cc_steps, cc_angle, cc_out);
  return 1;
}
