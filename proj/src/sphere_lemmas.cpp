#include "mirrortomo/sphere_lemmas.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "mirrortomo/errors.hpp"

namespace mtomo {

SphereOffsetResult sphere_offset_counterexample(double r, double x0, double k, int n_vertices,
                                                uint64_t seed) {
  require(r > 0.0 && x0 > 0.0 && x0 < r && k > 0.0, errc::bad_parameters,
          "sphere_offset_counterexample: need 0 < x0 < r and k > 0");

  Vec q(x0, 0.0, 0.0);
  Line m(Vec(x0, 0.0, -k), Vec(0.0, 1.0, 0.0));
  Hyperplane pi1 = plane_through(q, m);       // the plane x = x0
  Hyperplane pi2 = plane_through(-q, m);      // tilted back through the antipode

  SphereOffsetResult res;
  res.a = ball_section_area(r, Vec::zero(3), pi1);
  res.a_k = ball_section_area(r, Vec::zero(3), pi2);
  res.margin = res.a_k - res.a;

  if (n_vertices > 0) {
    res.discretization_bound = r * (1.0 - std::cos(3.0 / std::sqrt(n_vertices)));
    Polytope ball = make_ball(Vec::zero(3), r, n_vertices, seed);
    Scenario s;
    s.k1 = ball;
    s.k2 = ball;
    s.h = Hyperplane(Vec(0.0, 0.0, 1.0), -k);
    s.p1 = q;
    s.p2 = -q;
    s.mirror_tol = 5.0 * res.discretization_bound / ball.diameter();
    res.mirror_result = section_mirror_test(s, LineSample{m, "lemma-line"});
  }
  return res;
}

BallSearchResult ball_unequal_distance_search(double r, const Vec& q1, const Vec& q2,
                                              const Hyperplane& h0, const BallSearchGrid& grid) {
  require(r > 0.0, errc::bad_parameters, "ball_unequal_distance_search: radius must be positive");
  require(grid.n_angles >= 1 && grid.n_offsets >= 1 && grid.threshold > 0.0,
          errc::bad_parameters, "ball_unequal_distance_search: bad grid");
  require(norm(q1) < r && norm(q2) < r, errc::bad_configuration,
          "ball_unequal_distance_search: points must be interior to the ball");
  require(distance(q1, q2) > 1e-12, errc::bad_configuration,
          "ball_unequal_distance_search: points must differ");

  Vec span = q2 - q1;
  Vec off_line = q1 - (dot(q1, span) / norm2(span)) * span;
  require(norm(off_line) <= 1e-9 * std::max(1.0, norm(q1)), errc::bad_configuration,
          "ball_unequal_distance_search: center must lie on the line through the points");
  require(norm(cross(h0.normal, normalized(span))) <= 1e-9, errc::bad_configuration,
          "ball_unequal_distance_search: plane must be orthogonal to the axis");
  require(h0.signed_distance(q1) * h0.signed_distance(q2) > 0.0, errc::bad_configuration,
          "ball_unequal_distance_search: plane must not cross the segment");

  BallSearchResult res;
  res.symmetric = std::abs(norm(q1) - norm(q2)) <= 1e-12;

  Vec foot = h0.offset * h0.normal;  // the axis runs through the center along the normal
  SectionFrame frame = section_frame(h0, foot);
  int n_offsets = res.symmetric ? 1 : grid.n_offsets;
  char tag[48];

  for (int i = 0; i < grid.n_angles && !res.found; ++i) {
    double th = std::numbers::pi * i / grid.n_angles;
    Vec u = std::cos(th) * frame.e1 + std::sin(th) * frame.e2;
    Vec perp = -std::sin(th) * frame.e1 + std::cos(th) * frame.e2;
    for (int j = 0; j < n_offsets; ++j) {
      double s = grid.n_offsets < 2 ? 0.0 : j * (2.0 * r) / (grid.n_offsets - 1);
      Line m(foot + s * perp, u);
      double a1 = ball_section_area(r, Vec::zero(3), plane_through(q1, m));
      double a2 = ball_section_area(r, Vec::zero(3), plane_through(q2, m));
      double mismatch = std::abs(a1 - a2);
      ++res.n_scanned;
      res.best_mismatch = std::max(res.best_mismatch, mismatch);
      if (j == 0) res.axis_mismatch = std::max(res.axis_mismatch, mismatch);
      if (!res.symmetric && mismatch > grid.threshold) {
        std::snprintf(tag, sizeof tag, "grid:%d.%d", i, j);
        res.found = true;
        res.witness = LineSample{m, tag};
        res.a1 = a1;
        res.a2 = a2;
        break;
      }
    }
  }
  return res;
}

}  // namespace mtomo
