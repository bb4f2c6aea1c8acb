#include "mirrortomo/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mirrortomo/errors.hpp"

namespace mtomo {

double boundary_distance(const Vec& p, const Polygon2& poly) {
  double m = poly.inner_margin(p);
  if (m >= 0.0) return m;
  return point_polygon_distance(p, poly);
}

namespace {

// Endpoints of a chord ordered along dir: (lo, hi).
std::pair<Vec, Vec> oriented(const Chord& c, const Vec& dir) {
  if (dot(c.b - c.a, dir) >= 0.0) return {c.a, c.b};
  return {c.b, c.a};
}

CircleFit kasa_fit(const Points& pts) {
  require(pts.size() >= 3, errc::degenerate_input, "circle fit needs at least 3 points");
  Vec mean(0.0, 0.0);
  for (const Vec& p : pts) mean += p;
  mean = mean / static_cast<double>(pts.size());

  // Least squares on x^2 + y^2 + D x + E y + F = 0, in centered coordinates
  // so that the first-moment terms vanish and collinearity shows up as a
  // vanishing 2x2 determinant.
  double sxx = 0.0, sxy = 0.0, syy = 0.0, sxr = 0.0, syr = 0.0, sr = 0.0;
  for (const Vec& p : pts) {
    double x = p[0] - mean[0], y = p[1] - mean[1];
    double r2 = x * x + y * y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    sxr += x * r2;
    syr += y * r2;
    sr += r2;
  }
  double det = sxx * syy - sxy * sxy;
  require(det > 1e-12 * (sxx + syy) * (sxx + syy) && sr > 0.0, errc::degenerate_input,
          "circle fit: points are collinear");
  double d = (-sxr * syy + syr * sxy) / det;
  double e = (-syr * sxx + sxr * sxy) / det;
  double f = -sr / static_cast<double>(pts.size());

  CircleFit fit;
  fit.center = Vec(-0.5 * d + mean[0], -0.5 * e + mean[1]);
  fit.radius = std::sqrt(std::max(0.25 * (d * d + e * e) - f, 0.0));
  for (const Vec& p : pts)
    fit.max_radial_deviation =
        std::max(fit.max_radial_deviation, std::abs(distance(p, fit.center) - fit.radius));
  return fit;
}

// Second intersection of the line through p and q with the circle, where q is
// already (close to) a circle point: returns the root farther from q.
Vec second_circle_point(const Vec& center, double radius, const Vec& p, const Vec& q) {
  Vec d = q - p;
  double len = norm(d);
  require(len > 1e-12, errc::construction_breakdown,
          "rectangle orbit: anchor and corner coincide");
  d = d / len;
  Vec rel = p - center;
  double bq = dot(rel, d);
  double disc = bq * bq - (norm2(rel) - radius * radius);
  require(disc > -1e-12 * radius * radius, errc::construction_breakdown,
          "rectangle orbit: line misses the circumcircle");
  double s = std::sqrt(std::max(disc, 0.0));
  Vec x1 = p + (-bq - s) * d;
  Vec x2 = p + (-bq + s) * d;
  return distance(x1, q) >= distance(x2, q) ? x1 : x2;
}

// Second boundary point of poly on the line through p and q, with q on bd poly.
Vec second_polygon_point(const Polygon2& poly, const Vec& p, const Vec& q) {
  Chord c = chord(poly, p, q - p);
  require(!c.empty, errc::construction_breakdown, "rectangle orbit: line misses the polygon");
  return distance(c.a, q) >= distance(c.b, q) ? c.a : c.b;
}

}  // namespace

SymmetryVerdict central_symmetry_test(const Polygon2& poly, const Vec& a, const Vec& b,
                                      int n_dirs, double tol) {
  require(n_dirs > 0, errc::bad_parameters, "central_symmetry_test: n_dirs must be positive");
  require(poly.contains(a, 1e-9), errc::point_outside_body,
          "central_symmetry_test: first point is not interior");
  require(poly.contains(b, 1e-9), errc::point_outside_body,
          "central_symmetry_test: second point is not interior");

  SymmetryVerdict v;
  v.center = 0.5 * (a + b);
  v.worst_direction = Vec(1.0, 0.0);
  for (int i = 0; i < n_dirs; ++i) {
    double th = std::numbers::pi * i / n_dirs;
    Vec u(std::cos(th), std::sin(th));
    double mismatch = std::abs(chord(poly, a, u).length() - chord(poly, b, u).length());
    if (mismatch > v.max_length_mismatch) {
      v.max_length_mismatch = mismatch;
      v.worst_direction = u;
    }
  }

  Polygon2 reflected;
  reflected.verts.reserve(poly.size());
  for (const Vec& p : poly.verts) reflected.verts.push_back(2.0 * v.center - p);
  v.max_length_mismatch = std::max(v.max_length_mismatch, hausdorff2(poly, reflected));

  v.passed = v.max_length_mismatch <= tol;
  return v;
}

RectangleRecord inscribed_rectangle_test(const Polygon2& poly, const Vec& a, const Vec& b,
                                         const Vec& dir, double tol) {
  require(poly.contains(a, 1e-9), errc::point_outside_body,
          "inscribed_rectangle_test: first point is not interior");
  require(poly.contains(b, 1e-9), errc::point_outside_body,
          "inscribed_rectangle_test: second point is not interior");
  Vec u = normalized(dir);

  RectangleRecord rec;
  rec.direction = u;
  rec.chord_a = chord(poly, a, u);
  rec.chord_b = chord(poly, b, u);
  require(!rec.chord_a.empty && rec.chord_a.length() > 1e-12, errc::degenerate_chord,
          "inscribed_rectangle_test: chord through the first point is degenerate");
  require(!rec.chord_b.empty && rec.chord_b.length() > 1e-12, errc::degenerate_chord,
          "inscribed_rectangle_test: chord through the second point is degenerate");

  rec.length_mismatch = std::abs(rec.chord_a.length() - rec.chord_b.length());

  auto [a_lo, a_hi] = oriented(rec.chord_a, u);
  auto [b_lo, b_hi] = oriented(rec.chord_b, u);
  rec.ortho_residual = std::max(std::abs(dot(b_lo - a_lo, u)), std::abs(dot(b_hi - a_hi, u)));

  // Erect the exact rectangle on chord A and carry it to the line of chord B;
  // those two ideal corners must land on the boundary.
  Vec n = normalized(perp2(u));
  double gap = dot(b - a, n);
  rec.corner_residual = std::max(boundary_distance(a_lo + gap * n, poly),
                                 boundary_distance(a_hi + gap * n, poly));

  rec.passed = rec.length_mismatch <= tol && rec.ortho_residual <= tol &&
               rec.corner_residual <= tol;
  return rec;
}

RectangleVerdict inscribed_rectangle_scan(const Polygon2& poly, const Vec& a, const Vec& b,
                                          int n_dirs, double tol) {
  require(n_dirs > 0, errc::bad_parameters, "inscribed_rectangle_scan: n_dirs must be positive");
  RectangleVerdict v;
  v.passed = true;
  v.records.reserve(static_cast<size_t>(n_dirs));
  for (int i = 0; i < n_dirs; ++i) {
    double th = std::numbers::pi * i / n_dirs;
    Vec u(std::cos(th), std::sin(th));
    v.records.push_back(inscribed_rectangle_test(poly, a, b, u, tol));
    v.passed = v.passed && v.records.back().passed;
  }
  return v;
}

CircleFit circle_fit(const Polygon2& poly, [[maybe_unused]] double tol) {
  require(poly.size() >= 3, errc::degenerate_input, "circle_fit: need at least 3 vertices");
  Points sample = poly.verts;
  for (size_t i = 0; i < poly.size(); ++i)
    sample.push_back(0.5 * (poly.verts[i] + poly.verts[(i + 1) % poly.size()]));
  return kasa_fit(sample);
}

RectangleOrbit iterate_rectangles(const Polygon2& poly, const Vec& a, const Vec& b,
                                  const Vec& dir0, int steps) {
  require(distance(a, b) > 1e-12, errc::degenerate_input,
          "iterate_rectangles: the two base points coincide");
  require(steps >= 1, errc::bad_parameters, "iterate_rectangles: steps must be >= 1");
  require(poly.contains(a, 1e-9), errc::point_outside_body,
          "iterate_rectangles: first point is not interior");
  require(poly.contains(b, 1e-9), errc::point_outside_body,
          "iterate_rectangles: second point is not interior");

  Vec u = normalized(dir0);
  Chord ca = chord(poly, a, u);
  Chord cb = chord(poly, b, u);
  require(!ca.empty && ca.length() > 1e-12, errc::degenerate_chord,
          "iterate_rectangles: starting chord through the first point is degenerate");
  require(!cb.empty && cb.length() > 1e-12, errc::degenerate_chord,
          "iterate_rectangles: starting chord through the second point is degenerate");

  auto [d0, c0] = oriented(ca, u);
  auto [d0p, c0p] = oriented(cb, u);

  RectangleOrbit orbit;
  CircleFit fit = kasa_fit({c0, d0, c0p, d0p});
  orbit.circum_center = fit.center;
  orbit.circum_radius = fit.radius;
  orbit.steps.push_back(OrbitStep{c0, d0, c0p, d0p, 0.0});

  for (int n = 1; n <= steps; ++n) {
    const OrbitStep prev = orbit.steps.back();
    Vec c_next = second_circle_point(orbit.circum_center, orbit.circum_radius, a, prev.d_prime);
    Vec dp_next = second_circle_point(orbit.circum_center, orbit.circum_radius, b, prev.c);
    double gap = std::max(distance(c_next, second_polygon_point(poly, a, prev.d_prime)),
                          distance(dp_next, second_polygon_point(poly, b, prev.c)));
    orbit.steps.push_back(OrbitStep{c_next, prev.d_prime, prev.c, dp_next, gap});
    if (distance(c_next, prev.c) < 1e-12) break;
  }
  return orbit;
}

double circle_chord_halflength(double r, double t, const Vec& dir) {
  require(t >= 0.0, errc::bad_parameters, "circle_chord_halflength: offset must be non-negative");
  require(t < r, errc::point_outside_circle,
          "circle_chord_halflength: the pivot (t, 0) must be strictly inside the circle");
  double len = norm(dir);
  require(len > 0.0, errc::degenerate_input, "circle_chord_halflength: zero direction");
  double s = dir[1] / len;
  return std::sqrt(r * r - t * t * s * s);
}

}  // namespace mtomo
