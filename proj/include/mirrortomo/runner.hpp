#pragma once

#include <string>
#include <vector>

#include "mirrortomo/scenario.hpp"
#include "mirrortomo/sphere_lemmas.hpp"

namespace mtomo {

// Exit code conventions: 0 consistent/pass, 2 hypothesis failure (loud data,
// valid input), 3 inconsistent witness. Input problems throw; the CLI maps
// them to exit 1. All artifacts are deterministic for a fixed input and seed;
// wall-clock timings go to stderr, never into a file.
struct RunOutcome {
  int exit_code = 0;
};

// Writes report.json and lines.csv. 3D scenarios only.
RunOutcome run_verify(const ScenarioDoc& doc, const std::string& out_dir);

// 4D scenario: projects along gamma, verifies the reduced scenario, and runs
// the planar mirror-symmetry sweep. Writes report.json, lines.csv,
// projections.csv.
RunOutcome run_project(const ScenarioDoc& doc, const Vec& gamma_normal, double gamma_offset,
                       const std::string& out_dir);

struct SphereLemmaParams {
  double r = 1.0;
  std::vector<double> x0_grid{0.25, 0.5, 0.75};
  std::vector<double> k_grid{0.1, 0.5, 2.0};
};

// Closed-form margin sweep plus the unequal-distance line search on the ball.
// Writes sphere_lemmas.json.
RunOutcome run_sphere_lemmas(const SphereLemmaParams& params, const std::string& out_dir);

struct CircleCharParams {
  Vec a = Vec(0.0, 0.0);
  Vec b = Vec(0.0, 0.0);
  int n_dirs = 128;
  int n_steps = 50;
  double start_angle_deg = 60.0;
};

// Rectangle scan plus the corner-chasing orbit. Writes report.json,
// circle_char.csv, rectangle_orbit.csv.
RunOutcome run_circle_char(const PolygonDoc& doc, const CircleCharParams& params,
                           const std::string& out_dir);

}  // namespace mtomo
