#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mirrortomo/planar.hpp"
#include "mirrortomo/polytope.hpp"

namespace mtomo {

struct SamplingPlan {
  int n_angles = 16;
  int n_offsets = 8;
  int n_random = 32;
  uint64_t seed = 0;
};

struct Scenario {
  Polytope k1;
  Polytope k2;
  Hyperplane h;
  Vec p1;
  Vec p2;
  double mirror_tol = 1e-8;      // relative to the larger body diameter
  double conclusion_tol = 1e-8;  // same policy
  SamplingPlan sampling;
};

// Throws BadConfiguration unless: p1, p2 at distance > 1e-9 from H, p1 != p2,
// both bodies full-dimensional, and all dimensions agree.
void validate_scenario(const Scenario& s);

struct LineSample {
  Line m;
  std::string provenance;  // "grid:i,j" or "random:k"
};

struct Footprint {
  Vec center;  // a point of H
  double radius = 0.0;
};

// Smallest working disc in H covering the projections of both bodies and both
// points, inflated by 10%.
Footprint footprint_in(const Hyperplane& h, const Scenario& s);

// n_angles x n_offsets grid of lines in H plus n_random seeded draws, all with
// containment residual < 1e-10; deterministic per seed.
std::vector<LineSample> sample_lines(const Hyperplane& h, const Footprint& footprint,
                                     const SamplingPlan& plan);

// The only planes through M whose reflection can map aff{p2, M} onto
// aff{p1, M}: the dihedral bisectors of the two spanned planes.
std::vector<Hyperplane> candidate_mirrors(const Vec& p1, const Vec& p2, const Line& m);
inline std::vector<Hyperplane> candidate_mirrors(const Scenario& s, const Line& m) {
  return candidate_mirrors(s.p1, s.p2, m);
}

enum class LineStatus { PASS, FAIL, SKIPPED_EMPTY };
const char* line_status_name(LineStatus s);

struct MirrorTestResult {
  LineSample line;
  LineStatus status = LineStatus::SKIPPED_EMPTY;
  std::optional<Hyperplane> best_mirror;
  std::vector<double> distances;  // per candidate mirror
  std::array<double, 2> section_areas{0.0, 0.0};
};

// Sections both bodies with the planes spanned by (p1, M) and (p2, M) and
// tries both candidate mirrors. PASS iff the best Hausdorff distance is at
// most mirror_tol * max body diameter; SKIPPED_EMPTY iff a section is empty.
MirrorTestResult section_mirror_test(const Scenario& s, const LineSample& line);

enum class Verdict { CONSISTENT, HYPOTHESIS_FAILS, INCONSISTENT_WITNESS };
const char* verdict_name(Verdict v);

struct TheoremReport {
  std::vector<MirrorTestResult> lines;
  int n_pass = 0;
  int n_fail = 0;
  int n_skipped = 0;
  double hypothesis_pass_rate = 0.0;  // over non-skipped lines
  double conclusion_distance = 0.0;   // Hausdorff(vertices of S_H(K2), vertices of K1)
  double point_check = 0.0;           // |S_H(p2) - p1|
  Verdict verdict = Verdict::CONSISTENT;
  double mirror_tol_abs = 0.0;
  double conclusion_tol_abs = 0.0;
  // Diagnostics for the meeting point of L(p1, p2) with H.
  bool sigma_exists = false;
  Vec sigma;
  double dist_p1_sigma = 0.0;
  double dist_p2_sigma = 0.0;
  // When L(p1, p2) is parallel to H, K2 and p2 are replaced by their mirror
  // images before testing, exactly as the standing convention prescribes.
  bool replaced_k2 = false;
};

// Full run: samples lines, mirror-tests every section pair, then checks the
// global conclusion. CONSISTENT needs a perfect pass rate on non-skipped lines
// plus a conclusion distance within tolerance; a perfect pass rate with a
// failing conclusion is flagged INCONSISTENT_WITNESS.
TheoremReport verify_theorem(const Scenario& s);

struct ProjectionSymmetryReport {
  bool passed = false;
  std::vector<double> distances;  // per direction
  double worst_distance = 0.0;
  Vec worst_direction;
  double body_distance = 0.0;   // Hausdorff(vertices of S_H(K2), vertices of K1)
  bool co_occurrence_ok = false;  // projection verdict agrees with body-level check
};

// Projects both bodies onto n_dirs planes orthogonal to H and checks that the
// images are mirror-symmetric across the trace of H in each plane.
ProjectionSymmetryReport projection_symmetry_check(const Polytope& k1, const Polytope& k2,
                                                   const Hyperplane& h, int n_dirs, double tol);

// Collapses a 4D scenario to 3D by orthogonal projection onto gamma, which
// must be orthogonal to the scenario's H (else NotOrthogonal).
Scenario projection_reduction(const Scenario& s4, const Hyperplane& gamma);

struct RevolutionVerdict {
  bool passed = false;
  int n_planes_checked = 0;
  double max_radial_deviation = 0.0;
  double max_center_offset = 0.0;
};

// Slices K with n_planes planes orthogonal to the axis and circle-fits every
// section; passes iff all sections are round (deviation <= tol) and centered
// on the axis (offset <= tol).
RevolutionVerdict revolution_axis_test(const Polytope& k, const Line& axis, int n_planes,
                                       double tol);

struct ShadowSectionVerdict {
  bool passed = false;
  double section_to_shadow = 0.0;  // worst section vertex vs shadow point set
  double shadow_to_section = 0.0;  // worst shadow point vs filled section
};

// Compares the section K cut by gamma with the shadow boundary of K in the
// direction of gamma's normal; the two must coincide within tol, both ways.
ShadowSectionVerdict shadow_section_test(const Polytope& k, const Hyperplane& gamma, double tol);

}  // namespace mtomo
