#pragma once

#include <vector>

#include "mirrortomo/polygon.hpp"

namespace mtomo {

// Distance from p to the boundary curve of a convex polygon (zero only on it).
double boundary_distance(const Vec& p, const Polygon2& poly);

struct SymmetryVerdict {
  bool passed = false;
  Vec center;                       // midpoint of [a, b]
  double max_length_mismatch = 0.0; // worst chord-length gap, or symmetry Hausdorff if larger
  Vec worst_direction;
};

// Parallel-chord symmetry test: chords through a and b in the same direction
// must have equal length for every sampled direction, and the polygon must be
// point-symmetric about midpoint(a, b).
SymmetryVerdict central_symmetry_test(const Polygon2& poly, const Vec& a, const Vec& b,
                                      int n_dirs, double tol);

struct RectangleRecord {
  Vec direction;
  Chord chord_a;
  Chord chord_b;
  double length_mismatch = 0.0;
  double ortho_residual = 0.0;   // chord-endpoint joins must be orthogonal to direction
  double corner_residual = 0.0;  // ideal rectangle corners must sit on the boundary
  bool passed = false;
};

struct RectangleVerdict {
  bool passed = false;
  std::vector<RectangleRecord> records;
};

// Do the chords through a and b along dir span an inscribed rectangle?
RectangleRecord inscribed_rectangle_test(const Polygon2& poly, const Vec& a, const Vec& b,
                                         const Vec& dir, double tol);

// Same test over n_dirs directions uniform in [0, pi).
RectangleVerdict inscribed_rectangle_scan(const Polygon2& poly, const Vec& a, const Vec& b,
                                          int n_dirs, double tol);

struct CircleFit {
  Vec center;
  double radius = 0.0;
  double max_radial_deviation = 0.0;
};

// Algebraic least-squares circle over the polygon's vertices and edge
// midpoints. Midpoints matter: every quadrilateral's corners are concyclic, so
// a vertex-only fit could not distinguish a square from a disc. The deviation
// is reported; comparing it against tol is the caller's call.
CircleFit circle_fit(const Polygon2& poly, double tol);

struct OrbitStep {
  Vec c, d, c_prime, d_prime;
  double polygon_gap = 0.0;  // circle-derived corner vs. boundary-derived corner
};

struct RectangleOrbit {
  Vec circum_center;
  double circum_radius = 0.0;
  std::vector<OrbitStep> steps;
};

// Corner-chasing construction: start from the inscribed rectangle spanned by
// the chords through a and b along dir0, take its circumcircle D0, then
// repeatedly pick the second D0 point on the lines L(a, d_n') and L(b, c_n).
// The corner sequences should march toward the endpoints of the chord of poly
// through a and b. Each step also intersects the same line with the polygon
// boundary and records the gap between the two constructions.
RectangleOrbit iterate_rectangles(const Polygon2& poly, const Vec& a, const Vec& b,
                                  const Vec& dir0, int steps);

// Half-length of the chord of the circle radius r centered at the origin,
// along direction dir through the point (t, 0). Even in dir by construction.
double circle_chord_halflength(double r, double t, const Vec& dir);

}  // namespace mtomo
