#pragma once

#include <cstdint>
#include <optional>

#include "mirrortomo/harness.hpp"

namespace mtomo {

struct SphereOffsetResult {
  double a = 0.0;       // section area of the plane through the off-center point
  double a_k = 0.0;     // section area of the tilted plane through its antipode
  double margin = 0.0;  // a_k - a, strictly positive for every valid (r, x0, k)
  double discretization_bound = 0.0;
  std::optional<MirrorTestResult> mirror_result;
};

// Ball of radius r at the origin, point q = (x0, 0, 0), cutting plane
// H_k: z = -k, and the line M_k = H_k intersected with {x = x0}. The sections
// spanned by q and -q over M_k have different areas (a_k > a), so no mirror
// through M_k can map one onto the other. With n_vertices > 0 the mirror test
// also runs on a discretized ball, with the failure threshold pinned at five
// discretization bounds; n_vertices == 0 keeps just the closed forms.
SphereOffsetResult sphere_offset_counterexample(double r, double x0, double k,
                                                int n_vertices = 2000, uint64_t seed = 0);

struct BallSearchGrid {
  int n_angles = 64;
  int n_offsets = 16;
  double threshold = 1e-3;
};

struct BallSearchResult {
  bool found = false;
  bool symmetric = false;  // |q1| == |q2|: no witness exists, axis diagnostic only
  std::optional<LineSample> witness;
  double a1 = 0.0;
  double a2 = 0.0;
  double best_mismatch = 0.0;
  double axis_mismatch = 0.0;  // max |a1 - a2| over lines through the axis foot
  int n_scanned = 0;
};

// Searches lines M in h0 for unequal section areas of the planes spanned by
// q1 and q2 over M. q1, q2 must be interior, collinear with the center, with
// h0 orthogonal to that line and clear of the segment [q1, q2]. A witness
// exists precisely when |q1| != |q2|; the symmetric case only reports the
// exact equality seen on lines through the axis foot.
BallSearchResult ball_unequal_distance_search(double r, const Vec& q1, const Vec& q2,
                                              const Hyperplane& h0,
                                              const BallSearchGrid& grid = {});

}  // namespace mtomo
