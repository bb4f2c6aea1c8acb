#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "mirrortomo/harness.hpp"
#include "mirrortomo/rng.hpp"
#include "mirrortomo/sphere_lemmas.hpp"

using namespace mtomo;

namespace {

Scenario mirror_pair_scenario(uint64_t seed, int n_vertices = 30) {
  Scenario s;
  s.h = Hyperplane(Vec(0.0, 0.0, 1.0), 0.0);
  s.k1 = make_random_polytope(seed, n_vertices, ShapeClass::on_sphere, 3, 1.0,
                              Vec(0.1, -0.05, 0.55));
  s.k2 = reflect_polytope(s.h, s.k1);
  s.p1 = Vec(0.2, 0.1, 0.6);
  s.p2 = Vec(0.2, 0.1, -0.6);
  s.mirror_tol = 1e-10;
  s.conclusion_tol = 1e-10;
  s.sampling = SamplingPlan{16, 8, 32, seed};
  return s;
}

Polytope centered_cube(double half) {
  Points p;
  for (double x : {-half, half})
    for (double y : {-half, half})
      for (double z : {-half, half}) p.push_back(Vec(x, y, z));
  return convex_hull(p, 3);
}

Polytope sphere_like_revolution_body(int rings, int n_gon, double r) {
  std::vector<std::pair<double, double>> profile;
  for (int i = 1; i < rings; ++i) {
    double z = -r + 2.0 * r * i / rings;
    profile.push_back({std::sqrt(std::max(r * r - z * z, 0.0)), z});
  }
  profile.push_back({0.0, -r});
  profile.push_back({0.0, r});
  return make_revolution_body(profile, n_gon);
}

}  // namespace

TEST_CASE("sample_lines: cardinality, containment, determinism") {
  Hyperplane h(Vec(1.0, 2.0, -1.0), 0.7);
  Footprint fp{orthogonal_project_point(h, Vec(0.3, -0.2, 1.0)), 2.5};

  SamplingPlan plan{4, 3, 0, 42};
  std::vector<LineSample> grid = sample_lines(h, fp, plan);
  CHECK(grid.size() == 12);

  plan.n_random = 5;
  std::vector<LineSample> all = sample_lines(h, fp, plan);
  CHECK(all.size() == 17);
  for (const LineSample& ls : all) {
    CHECK(std::abs(h.signed_distance(ls.m.base)) < 1e-10);
    CHECK(std::abs(h.signed_distance(ls.m.at(3.7))) < 1e-10);
    CHECK(norm(ls.m.dir) == doctest::Approx(1.0).epsilon(1e-14));
  }

  std::vector<LineSample> again = sample_lines(h, fp, plan);
  REQUIRE(again.size() == all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(distance(again[i].m.base, all[i].m.base) == 0.0);
    CHECK(distance(again[i].m.dir, all[i].m.dir) == 0.0);
    CHECK(again[i].provenance == all[i].provenance);
  }

  plan.seed = 43;
  std::vector<LineSample> other = sample_lines(h, fp, plan);
  bool any_diff = false;
  for (size_t i = 12; i < other.size(); ++i)
    if (distance(other[i].m.base, all[i].m.base) != 0.0) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("candidate_mirrors: symmetric coordinate examples") {
  Line x_axis(Vec(0.0, 0.0, 0.0), Vec(1.0, 0.0, 0.0));

  for (auto [p1, p2] : {std::pair<Vec, Vec>{Vec(0, 0, 1), Vec(0, 0, -1)},
                        std::pair<Vec, Vec>{Vec(0, 1, 1), Vec(0, 1, -1)}}) {
    std::vector<Hyperplane> cands = candidate_mirrors(p1, p2, x_axis);
    REQUIRE(cands.size() == 2);
    bool has_z0 = false, has_y0 = false;
    for (const Hyperplane& c : cands) {
      if (plane_equal(c, Hyperplane(Vec(0, 0, 1), 0.0))) has_z0 = true;
      if (plane_equal(c, Hyperplane(Vec(0, 1, 0), 0.0))) has_y0 = true;
    }
    CHECK(has_z0);
    if (distance(p1, Vec(0, 0, 1)) == 0.0) CHECK(has_y0);
  }
}

TEST_CASE("candidate_mirrors map one spanned plane onto the other") {
  Rng rng(4242);
  int done = 0;
  while (done < 60) {
    Vec base(rng.normal(), rng.normal(), rng.normal());
    Vec dir(rng.normal(), rng.normal(), rng.normal());
    if (norm(dir) < 0.1) continue;
    Line m(base, dir);
    Vec p1(rng.normal(), rng.normal(), rng.normal());
    Vec p2(rng.normal(), rng.normal(), rng.normal());
    Hyperplane pi1, pi2;
    try {
      pi1 = plane_through(p1, m);
      pi2 = plane_through(p2, m);
    } catch (const Error&) {
      continue;
    }

    std::vector<Hyperplane> cands = candidate_mirrors(p1, p2, m);
    REQUIRE(!cands.empty());
    Vec w = p2 - m.base;
    w = normalized(w - dot(w, m.dir) * m.dir);
    Points probes = {p2, m.base + w, m.at(1.0) + 2.0 * w};
    for (const Hyperplane& c : cands) {
      CHECK(std::abs(c.signed_distance(m.base)) < 1e-10);
      CHECK(std::abs(c.signed_distance(m.at(1.0))) < 1e-10);
      for (const Vec& q : probes)
        CHECK(std::abs(pi1.signed_distance(reflect_point(c, q))) < 1e-10);
    }
    ++done;
  }
}

TEST_CASE("section_mirror_test passes every line of an exact mirror pair") {
  Scenario s = mirror_pair_scenario(11);
  std::vector<LineSample> lines = sample_lines(s.h, footprint_in(s.h, s), s.sampling);
  double diam = std::max(s.k1.diameter(), s.k2.diameter());
  int tested = 0;
  for (const LineSample& ls : lines) {
    MirrorTestResult r = section_mirror_test(s, ls);
    if (r.status == LineStatus::SKIPPED_EMPTY) continue;
    ++tested;
    CHECK(r.status == LineStatus::PASS);
    REQUIRE(!r.distances.empty());
    CHECK(*std::min_element(r.distances.begin(), r.distances.end()) < 1e-10 * diam);
  }
  CHECK(tested > 0);
}

TEST_CASE("section_mirror_test fails for skew points in a ball") {
  Polytope ball = make_ball(Vec::zero(3), 1.0, 600, 5);
  Scenario s;
  s.k1 = ball;
  s.k2 = ball;
  s.h = Hyperplane(Vec(0, 0, 1), 0.0);
  s.p1 = Vec(0.5, 0.0, 0.3);
  s.p2 = Vec(-0.5, 0.0, -0.3);
  s.mirror_tol = 0.01 / ball.diameter();

  LineSample ls{Line(Vec(0.2, 0.0, 0.0), Vec(0.0, 1.0, 0.0)), "probe"};
  MirrorTestResult r = section_mirror_test(s, ls);
  REQUIRE(r.status != LineStatus::SKIPPED_EMPTY);
  CHECK(r.status == LineStatus::FAIL);
  for (double d : r.distances) CHECK(d > 0.01);
}

TEST_CASE("section_mirror_test skips lines whose planes miss the bodies") {
  Polytope ball = make_ball(Vec::zero(3), 0.5, 200, 6);
  Scenario s;
  s.k1 = ball;
  s.k2 = ball;
  s.h = Hyperplane(Vec(0, 0, 1), 0.0);
  s.p1 = Vec(0.0, 0.0, 2.0);
  s.p2 = Vec(0.0, 0.0, -2.0);

  LineSample far{Line(Vec(10.0, 0.0, 0.0), Vec(0.0, 1.0, 0.0)), "far"};
  CHECK(section_mirror_test(s, far).status == LineStatus::SKIPPED_EMPTY);
}

TEST_CASE("verify_theorem: exact mirror pair is CONSISTENT with zero residuals") {
  Scenario s = mirror_pair_scenario(29);
  TheoremReport rep = verify_theorem(s);
  CHECK(rep.verdict == Verdict::CONSISTENT);
  CHECK(rep.n_fail == 0);
  CHECK(rep.n_pass > 0);
  CHECK(rep.hypothesis_pass_rate == 1.0);
  CHECK(rep.conclusion_distance == 0.0);
  CHECK(rep.point_check == 0.0);
  CHECK(rep.lines.size() == 16 * 8 + 32);
  CHECK_FALSE(rep.replaced_k2);
  REQUIRE(rep.sigma_exists);
  CHECK(std::abs(rep.dist_p1_sigma - rep.dist_p2_sigma) <= 1e-9);
}

TEST_CASE("verify_theorem: rotated ellipsoid fails the hypothesis") {
  Scenario s;
  s.h = Hyperplane(Vec(0, 0, 1), 0.0);
  s.k1 = make_ellipsoid(1.0, 0.7, 0.5, 300, Vec(0.0, 0.0, 0.6), 3);
  s.k2 = rotate_polytope(s.k1, Vec(0.0, 0.0, 1.0), 10.0, Vec(0.0, 0.0, 0.6));
  s.p1 = Vec(0.0, 0.0, 0.6);
  s.p2 = Vec(0.0, 0.0, -0.6);
  s.mirror_tol = 1e-4;
  s.conclusion_tol = 1e-4;
  s.sampling = SamplingPlan{8, 4, 8, 17};

  TheoremReport rep = verify_theorem(s);
  CHECK(rep.verdict == Verdict::HYPOTHESIS_FAILS);
  CHECK(rep.n_fail > rep.n_pass);
}

TEST_CASE("verify_theorem substitutes the mirrored body when L runs parallel to H") {
  Polytope body = centered_cube(0.5);
  Scenario s;
  s.h = Hyperplane(Vec(0, 0, 1), 0.0);
  s.k1 = body;
  s.k2 = body;
  s.p1 = Vec(0.2, 0.0, 0.3);
  s.p2 = Vec(-0.2, 0.0, 0.3);
  s.sampling = SamplingPlan{4, 3, 4, 1};

  TheoremReport rep = verify_theorem(s);
  CHECK(rep.replaced_k2);
  REQUIRE(rep.sigma_exists);
  CHECK(std::abs(rep.dist_p1_sigma - rep.dist_p2_sigma) <= 1e-9);
}

TEST_CASE("projection_symmetry_check: mirror pair, translated control, self-symmetry") {
  Scenario s = mirror_pair_scenario(31);

  ProjectionSymmetryReport ok = projection_symmetry_check(s.k1, s.k2, s.h, 50, 1e-10);
  CHECK(ok.passed);
  CHECK(ok.worst_distance < 1e-10);
  CHECK(ok.body_distance < 1e-10);
  CHECK(ok.co_occurrence_ok);

  Polytope shifted = translate_polytope(s.k2, Vec(0.2, 0.0, 0.0));
  ProjectionSymmetryReport bad = projection_symmetry_check(s.k1, shifted, s.h, 50, 1e-10);
  CHECK_FALSE(bad.passed);
  CHECK(bad.worst_distance > 0.19);
  CHECK(bad.co_occurrence_ok);

  Polytope cube = centered_cube(0.4);
  ProjectionSymmetryReport self =
      projection_symmetry_check(cube, cube, Hyperplane(Vec(0, 0, 1), 0.0), 16, 1e-10);
  CHECK(self.passed);
}

TEST_CASE("projection_reduction: 4D mirror pair reduces to a CONSISTENT 3D scenario") {
  Scenario s4;
  s4.h = Hyperplane(Vec(0.0, 0.0, 1.0, 0.0), 0.0);
  s4.k1 = make_random_polytope(23, 26, ShapeClass::on_sphere, 4, 1.0,
                               Vec(0.05, -0.1, 0.6, 0.2));
  s4.k2 = reflect_polytope(s4.h, s4.k1);
  s4.p1 = Vec(0.1, 0.0, 0.5, 0.15);
  s4.p2 = Vec(0.1, 0.0, -0.5, 0.15);
  s4.mirror_tol = 1e-10;
  s4.conclusion_tol = 1e-10;
  s4.sampling = SamplingPlan{8, 6, 10, 23};

  Hyperplane gamma = Hyperplane::from_unit(Vec(0.0, 0.0, 0.0, 1.0), 0.0);
  Scenario s3 = projection_reduction(s4, gamma);
  CHECK(s3.k1.dim == 3);
  CHECK(s3.p1.dim == 3);
  CHECK(distance(s3.p1, Vec(0.1, 0.0, 0.5)) == 0.0);
  CHECK(plane_equal(s3.h, Hyperplane(Vec(0, 0, 1), 0.0)));

  TheoremReport rep = verify_theorem(s3);
  CHECK(rep.verdict == Verdict::CONSISTENT);
  CHECK(rep.conclusion_distance == 0.0);

  Hyperplane tilted(Vec(0.0, 0.0, 0.1, 1.0), 0.0);
  CHECK_THROWS_AS(projection_reduction(s4, tilted), Error);
  try {
    projection_reduction(s4, tilted);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_orthogonal);
  }
}

TEST_CASE("sphere_offset_counterexample closed forms and limits") {
  SphereOffsetResult res = sphere_offset_counterexample(1.0, 0.5, 0.25, 0);
  CHECK(res.a == doctest::Approx(0.75 * std::numbers::pi).epsilon(1e-12));
  double d = 0.25 * 0.5 / std::sqrt(0.25 * 0.25 + 4.0 * 0.5 * 0.5);
  CHECK(res.a_k == doctest::Approx(std::numbers::pi * (1.0 - d * d)).epsilon(1e-12));
  CHECK(res.margin > 0.0);
  CHECK_FALSE(res.mirror_result.has_value());

  // Larger k tilts the second plane toward the vertical x = -x0 limit, so the
  // margin decays toward zero without ever reaching it.
  double prev = res.margin;
  for (double k : {1.0, 4.0, 20.0, 100.0}) {
    double m = sphere_offset_counterexample(1.0, 0.5, k, 0).margin;
    CHECK(m > 0.0);
    CHECK(m < prev);
    prev = m;
  }

  CHECK_THROWS_AS(sphere_offset_counterexample(1.0, 0.0, 0.5, 0), Error);
  CHECK_THROWS_AS(sphere_offset_counterexample(1.0, 1.0, 0.5, 0), Error);
  CHECK_THROWS_AS(sphere_offset_counterexample(1.0, 0.5, 0.0, 0), Error);
}

TEST_CASE("sphere_offset_counterexample: discretized ball cannot be mirrored") {
  SphereOffsetResult res = sphere_offset_counterexample(1.0, 0.5, 0.25, 2000, 12);
  REQUIRE(res.mirror_result.has_value());
  const MirrorTestResult& mr = *res.mirror_result;
  REQUIRE(mr.status != LineStatus::SKIPPED_EMPTY);
  CHECK(mr.status == LineStatus::FAIL);
  double best = *std::min_element(mr.distances.begin(), mr.distances.end());
  CHECK(best > 5.0 * res.discretization_bound);
}

TEST_CASE("ball_unequal_distance_search finds a witness for unequal radii") {
  BallSearchResult res = ball_unequal_distance_search(
      1.0, Vec(0.0, 0.0, 0.3), Vec(0.0, 0.0, -0.5), Hyperplane(Vec(0, 0, 1), -0.8),
      BallSearchGrid{64, 16, 1e-3});
  CHECK_FALSE(res.symmetric);
  REQUIRE(res.found);
  CHECK(std::abs(res.a1 - res.a2) > 1e-3);
  REQUIRE(res.witness.has_value());
  CHECK(std::abs(Hyperplane(Vec(0, 0, 1), -0.8).signed_distance(res.witness->m.base)) < 1e-10);
}

TEST_CASE("ball_unequal_distance_search: symmetric points give exact axis equality") {
  BallSearchResult res = ball_unequal_distance_search(
      1.0, Vec(0.0, 0.0, 0.4), Vec(0.0, 0.0, -0.4), Hyperplane(Vec(0, 0, 1), -0.8),
      BallSearchGrid{64, 16, 1e-3});
  CHECK(res.symmetric);
  CHECK_FALSE(res.found);
  CHECK(res.axis_mismatch < 1e-12);
  CHECK(res.n_scanned == 64);
}

TEST_CASE("ball_unequal_distance_search rejects broken configurations") {
  Hyperplane h0(Vec(0, 0, 1), -0.8);
  // Off the common line through the center.
  CHECK_THROWS_AS(
      ball_unequal_distance_search(1.0, Vec(0.1, 0.0, 0.3), Vec(0.0, 0.0, -0.5), h0, {}), Error);
  // Plane crosses the segment.
  CHECK_THROWS_AS(ball_unequal_distance_search(1.0, Vec(0, 0, 0.3), Vec(0, 0, -0.5),
                                               Hyperplane(Vec(0, 0, 1), 0.0), {}),
                  Error);
  // Plane not orthogonal to the line.
  CHECK_THROWS_AS(ball_unequal_distance_search(1.0, Vec(0, 0, 0.3), Vec(0, 0, -0.5),
                                               Hyperplane(Vec(0.2, 0, 1), -0.8), {}),
                  Error);
  // Point outside the ball.
  CHECK_THROWS_AS(
      ball_unequal_distance_search(1.0, Vec(0, 0, 1.3), Vec(0, 0, -0.5), h0, {}), Error);
}

TEST_CASE("revolution_axis_test accepts revolution bodies and rejects others") {
  Polytope body = sphere_like_revolution_body(10, 24, 0.8);
  Line z_axis(Vec::zero(3), Vec(0, 0, 1));
  double ring_tol = (1.0 - std::cos(std::numbers::pi / 24)) * 0.8 + 1e-9;

  RevolutionVerdict good = revolution_axis_test(body, z_axis, 12, ring_tol);
  CHECK(good.passed);
  CHECK(good.max_radial_deviation <= ring_tol);
  CHECK(good.max_center_offset <= ring_tol);

  RevolutionVerdict cube = revolution_axis_test(centered_cube(0.5), z_axis, 6, ring_tol);
  CHECK_FALSE(cube.passed);
  CHECK(cube.max_radial_deviation > 0.08);

  Polytope ell = make_ellipsoid(1.0, 1.0, 2.0, 700, Vec::zero(3), 9);
  double disc_tol = 2.0 * (1.0 - std::cos(3.0 / std::sqrt(700.0))) * 2.0;
  RevolutionVerdict along = revolution_axis_test(ell, z_axis, 9, disc_tol);
  CHECK(along.passed);
  RevolutionVerdict across =
      revolution_axis_test(ell, Line(Vec::zero(3), Vec(1, 0, 0)), 9, disc_tol);
  CHECK_FALSE(across.passed);
}

TEST_CASE("shadow_section_test matches sections with silhouettes") {
  Polytope ball = make_ball(Vec::zero(3), 1.0, 500, 8);
  double ball_tol = 2.0 * 3.0 / std::sqrt(500.0);
  ShadowSectionVerdict through_center =
      shadow_section_test(ball, Hyperplane(Vec(0.3, 1.0, 0.2), 0.0), ball_tol);
  CHECK(through_center.passed);

  Polytope body = sphere_like_revolution_body(10, 24, 0.8);
  double band_tol = 2.0 * 0.8 * std::sin(std::numbers::pi / 24);
  for (int i = 0; i < 8; ++i) {
    double th = std::numbers::pi * i / 8.0;
    Hyperplane axial(Vec(-std::sin(th), std::cos(th), 0.0), 0.0);
    ShadowSectionVerdict v = shadow_section_test(body, axial, band_tol);
    CHECK(v.passed);
  }

  // On the plane x=y the cube's shadow equals its section (the off-plane
  // corners project inside), so probe at 22.5 deg where they differ: the
  // silhouette sticks out by 0.5*(cos+sin-1/cos)(22.5 deg) ~ 0.112.
  double th = std::numbers::pi / 8.0;
  ShadowSectionVerdict cube = shadow_section_test(
      centered_cube(0.5), Hyperplane(Vec(-std::sin(th), std::cos(th), 0.0), 0.0), 1e-6);
  CHECK_FALSE(cube.passed);
  CHECK(std::max(cube.section_to_shadow, cube.shadow_to_section) > 0.1);
}

TEST_CASE("ball discretization covers the sphere within the pinned angle") {
  int n = 2000;
  Polytope ball = make_ball(Vec::zero(3), 1.0, n, 7);
  Rng rng(7070);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Vec u = normalized(Vec(rng.normal(), rng.normal(), rng.normal()));
    double best = -1.0;
    for (const Vec& v : ball.vertices) best = std::max(best, dot(u, v));
    worst = std::max(worst, std::acos(std::min(best, 1.0)));
  }
  CHECK(worst <= 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("scenario validation rejects degenerate inputs") {
  Scenario s = mirror_pair_scenario(3, 12);
  CHECK_NOTHROW(validate_scenario(s));

  Scenario on_plane = s;
  on_plane.p1 = Vec(0.2, 0.1, 0.0);
  CHECK_THROWS_AS(validate_scenario(on_plane), Error);

  Scenario same = s;
  same.p2 = same.p1;
  CHECK_THROWS_AS(validate_scenario(same), Error);

  Scenario flat = s;
  flat.k2.full_dim = false;
  CHECK_THROWS_AS(validate_scenario(flat), Error);
}
