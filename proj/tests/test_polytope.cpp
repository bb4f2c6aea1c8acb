#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mirrortomo/polytope.hpp"
#include "mirrortomo/rng.hpp"
#include "oracles.hpp"

using namespace mtomo;

namespace {

Points cube_corners(double lo = 0.0, double hi = 1.0) {
  Points p;
  for (double x : {lo, hi})
    for (double y : {lo, hi})
      for (double z : {lo, hi}) p.push_back(Vec(x, y, z));
  return p;
}

Points octahedron(double s = 1.0) {
  Points p;
  for (int k = 0; k < 3; ++k) {
    p.push_back(s * Vec::axis(k, 3));
    p.push_back(-s * Vec::axis(k, 3));
  }
  return p;
}

Polygon2 regular_polygon(int n, double r, const Vec& center = Vec(0.0, 0.0)) {
  Polygon2 poly;
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * std::numbers::pi * i / n;
    poly.verts.push_back(center + Vec(r * std::cos(a), r * std::sin(a)));
  }
  return poly;
}

}  // namespace

TEST_CASE("hull2 drops interior and collinear points") {
  Points p = {Vec(0.0, 0.0), Vec(1.0, 0.0), Vec(1.0, 1.0), Vec(0.0, 1.0),
              Vec(0.5, 0.5), Vec(0.5, 0.0)};
  Polygon2 h = hull2(p);
  CHECK(h.size() == 4);
  CHECK(h.area() == doctest::Approx(1.0));
  // CCW cycle.
  double sum = 0.0;
  for (size_t i = 0; i < h.size(); ++i)
    sum += cross2(h.verts[i], h.verts[(i + 1) % h.size()]);
  CHECK(sum > 0.0);
}

TEST_CASE("convex_hull dim 2 rejects collinear input") {
  Points p = {Vec(0.0, 0.0), Vec(1.0, 1.0), Vec(2.0, 2.0)};
  CHECK_THROWS_AS(convex_hull(p, 2), Error);
}

TEST_CASE("convex_hull 3D keeps exactly the extreme points") {
  Points p = octahedron();
  Polytope body = convex_hull(p, 3);
  CHECK(body.vertices.size() == 6);
  CHECK(volume(body) == doctest::Approx(4.0 / 3.0));

  Points q = cube_corners();
  q.push_back(Vec(0.5, 0.5, 0.5));       // interior
  q.push_back(Vec(0.5, 0.0, 0.0));       // on an edge
  q.push_back(Vec(0.5, 0.5, 0.0));       // on a facet
  Polytope cube = convex_hull(q, 3);
  CHECK(cube.vertices.size() == 8);
  CHECK(volume(cube) == doctest::Approx(1.0));
  for (const Vec& v : cube.vertices) {
    CHECK(std::abs(v[0] - 0.5) == doctest::Approx(0.5));
    CHECK(std::abs(v[1] - 0.5) == doctest::Approx(0.5));
    CHECK(std::abs(v[2] - 0.5) == doctest::Approx(0.5));
  }
}

TEST_CASE("convex_hull 3D rejects coplanar input") {
  Points p = {Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(1, 1, 0), Vec(0.3, 0.4, 0)};
  CHECK_THROWS_AS(convex_hull(p, 3), Error);
}

TEST_CASE("convex_hull 3D on random clouds: containment and extremeness") {
  Rng rng(101);
  for (int round = 0; round < 8; ++round) {
    Points p;
    int n = 40 + 10 * round;
    for (int i = 0; i < n; ++i) {
      Vec v(rng.normal(), rng.normal(), rng.normal());
      if (round % 2 == 0) v = normalized(v);  // cospherical stress
      p.push_back(v);
    }
    Polytope body = convex_hull(p, 3);
    double scale = bbox_diagonal(p);
    for (const Vec& v : p) CHECK(body.signed_gap(v) <= 1e-9 * scale);
    // Every kept vertex is genuinely extreme: removing it moves the hull.
    for (const Vec& v : body.vertices) {
      Points rest;
      for (const Vec& w : body.vertices)
        if (distance(v, w) > 0.0) rest.push_back(w);
      Polytope without = convex_hull(rest, 3);
      CHECK(without.signed_gap(v) > 1e-10 * scale);
    }
    // Determinism.
    Polytope again = convex_hull(p, 3);
    REQUIRE(again.vertices.size() == body.vertices.size());
    for (size_t i = 0; i < body.vertices.size(); ++i)
      CHECK(distance(again.vertices[i], body.vertices[i]) == 0.0);
  }
}

TEST_CASE("plane_section of a cube") {
  Polytope cube = convex_hull(cube_corners(), 3);
  EmbeddedSection s = plane_section(cube, Hyperplane(Vec(0, 0, 1), 0.5));
  REQUIRE(s.poly.size() == 4);
  CHECK(s.poly.area() == doctest::Approx(1.0));
  for (const Vec& v3 : s.verts3()) CHECK(std::abs(v3[2] - 0.5) < 1e-12);

  CHECK(plane_section(cube, Hyperplane(Vec(0, 0, 1), 2.0)).empty());
}

TEST_CASE("plane_section of an octahedron at z=0.25") {
  Polytope body = convex_hull(octahedron(), 3);
  EmbeddedSection s = plane_section(body, Hyperplane(Vec(0, 0, 1), 0.25));
  REQUIRE(s.poly.size() == 4);
  CHECK(s.poly.area() == doctest::Approx(1.125));
  Points expect = {Vec(0.75, 0.0, 0.25), Vec(0.0, 0.75, 0.25), Vec(-0.75, 0.0, 0.25),
                   Vec(0.0, -0.75, 0.25)};
  CHECK(hausdorff_points(s.verts3(), expect) < 1e-12);
}

TEST_CASE("plane_section agrees with half-space clipping oracle") {
  Rng rng(202);
  int done = 0;
  while (done < 40) {
    int n = 10 + static_cast<int>(rng.uniform() * 40);
    Points p;
    for (int i = 0; i < n; ++i)
      p.push_back(Vec(rng.normal(), rng.normal(), rng.normal()));
    Polytope body;
    try {
      body = convex_hull(p, 3);
    } catch (const Error&) {
      continue;
    }
    Vec nrm(rng.normal(), rng.normal(), rng.normal());
    if (norm(nrm) < 1e-9) continue;
    Hyperplane plane(nrm, rng.uniform(-1.0, 1.0) * norm(nrm));

    EmbeddedSection mine = plane_section(body, plane);
    Points ref = oracle::section_by_halfspace_clipping(body.vertices, plane);

    if (mine.empty()) {
      // Oracle may produce grazing artifacts only within tolerance of the body.
      for (const Vec& q : ref) CHECK(body.signed_gap(q) < 1e-9);
      ++done;
      continue;
    }
    REQUIRE(!ref.empty());
    // Compare as convex sets in the section plane.
    Points ref_uv;
    for (const Vec& q : ref) ref_uv.push_back(mine.frame.project(q));
    Polygon2 ref_poly = hull2(ref_uv);
    if (mine.poly.size() >= 3 && ref_poly.size() >= 3) {
      CHECK(hausdorff2(mine.poly, ref_poly) < 1e-10);
    } else {
      CHECK(hausdorff_points(mine.poly.verts, ref_poly.verts) < 1e-9);
    }
    ++done;
  }
}

TEST_CASE("sectioning commutes with reflection") {
  Rng rng(303);
  for (int round = 0; round < 20; ++round) {
    Points p;
    for (int i = 0; i < 30; ++i) p.push_back(Vec(rng.normal(), rng.normal(), rng.normal()));
    Polytope body = convex_hull(p, 3);
    Vec mn(rng.normal(), rng.normal(), rng.normal());
    if (norm(mn) < 1e-9) continue;
    Hyperplane mirror(mn, rng.uniform(-0.5, 0.5) * norm(mn));
    Vec pn(rng.normal(), rng.normal(), rng.normal());
    if (norm(pn) < 1e-9) continue;
    Hyperplane plane(pn, rng.uniform(-0.5, 0.5) * norm(pn));

    Polytope rbody = reflect_polytope(mirror, body);
    EmbeddedSection s1 = plane_section(rbody, reflect_plane(mirror, plane));
    EmbeddedSection s2 = plane_section(body, plane);
    if (s2.empty()) {
      CHECK(s1.empty());
      continue;
    }
    REQUIRE(!s1.empty());
    EmbeddedSection s2r = reflect_section(mirror, s2);
    CHECK(hausdorff_sections(s1, s2r) < 1e-10);
  }
}

TEST_CASE("orthogonal_projection_body flattens onto the target") {
  Polytope cube = convex_hull(cube_corners(), 3);
  Polytope flat = orthogonal_projection_body(cube, Hyperplane(Vec(0, 0, 1), 0.0));
  CHECK_FALSE(flat.full_dim);
  REQUIRE(flat.vertices.size() == 4);
  for (const Vec& v : flat.vertices) {
    CHECK(v[2] == doctest::Approx(0.0));
    CHECK(std::abs(v[0] - 0.5) == doctest::Approx(0.5));
    CHECK(std::abs(v[1] - 0.5) == doctest::Approx(0.5));
  }
}

TEST_CASE("projection commutes with hull (4D onto x4=0)") {
  Rng rng(404);
  Points p;
  for (int i = 0; i < 40; ++i) {
    Vec v(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    p.push_back(normalized(v));
  }
  Polytope body = make_random_polytope(404, 40, ShapeClass::on_sphere, 4);
  Hyperplane target = Hyperplane::from_unit(Vec(0, 0, 0, 1), 0.0);
  Polytope proj = orthogonal_projection_body(body, target);
  CHECK_FALSE(proj.full_dim);
  for (const Vec& v : proj.vertices) CHECK(std::abs(v[3]) < 1e-12);

  // Independent route: drop the x4 coordinate, hull in 3D.
  Points dropped;
  for (const Vec& v : body.vertices) dropped.push_back(Vec(v[0], v[1], v[2]));
  Polytope ref = convex_hull(dropped, 3);
  Points proj3;
  for (const Vec& v : proj.vertices) proj3.push_back(Vec(v[0], v[1], v[2]));
  CHECK(hausdorff_points(proj3, ref.vertices) < 1e-12);

  // Random convex combinations of projected vertices stay inside the hull.
  for (int t = 0; t < 50; ++t) {
    Vec mix = Vec::zero(3);
    double wsum = 0.0;
    for (const Vec& v : proj3) {
      double w = rng.uniform();
      mix += w * v;
      wsum += w;
    }
    mix = mix / wsum;
    CHECK(ref.signed_gap(mix) <= 1e-10);
  }
}

TEST_CASE("central_projection scales a translated cube") {
  // Box [-1,1]^2 x [2,4] seen from the origin: the near face wins every
  // direction, so the image on z=1 is exactly the square [-1/2,1/2]^2.
  Points p;
  for (double x : {-1.0, 1.0})
    for (double y : {-1.0, 1.0})
      for (double z : {2.0, 4.0}) p.push_back(Vec(x, y, z));
  Polytope cube = convex_hull(p, 3);
  Polygon2 img = central_projection(cube, Vec(0, 0, 0), Hyperplane(Vec(0, 0, 1), 1.0));
  REQUIRE(img.size() == 4);
  double m = 0.0;
  for (const Vec& v : img.verts) m = std::max(m, std::max(std::abs(v[0]), std::abs(v[1])));
  CHECK(m == doctest::Approx(0.5));

  // Each vertex ray lands inside the image.
  for (const Vec& v : cube.vertices) {
    double t = 1.0 / v[2];
    Vec hit(v[0] * t, v[1] * t);
    CHECK(point_polygon_distance(hit, img) < 1e-12);
  }
}

TEST_CASE("central_projection rejects straddling bodies") {
  Polytope oct = convex_hull(octahedron(), 3);
  CHECK_THROWS_AS(central_projection(oct, Vec(0, 0, 0), Hyperplane(Vec(0, 0, 1), 1.0)), Error);
  try {
    central_projection(oct, Vec(0, 0, 0), Hyperplane(Vec(0, 0, 1), 1.0));
  } catch (const Error& e) {
    CHECK(e.code() == errc::unbounded_projection);
  }
  // Center on the target plane.
  CHECK_THROWS_AS(central_projection(oct, Vec(0, 0, 1), Hyperplane(Vec(0, 0, 1), 1.0)), Error);
}

TEST_CASE("shadow_boundary of octahedron and cube") {
  Polytope oct = convex_hull(octahedron(), 3);
  Points sb = shadow_boundary(oct, Vec(0, 0, 1));
  REQUIRE(sb.size() == 4);
  for (const Vec& v : sb) {
    CHECK(v[2] == doctest::Approx(0.0));
    CHECK(norm(v) == doctest::Approx(1.0));
  }

  Polytope cube = convex_hull(cube_corners(), 3);
  Points sc = shadow_boundary(cube, Vec(0, 0, 1));
  REQUIRE(sc.size() == 8);  // 4 columns of 2
  for (size_t i = 0; i + 1 < sc.size(); i += 2) {
    CHECK(sc[i][0] == doctest::Approx(sc[i + 1][0]));
    CHECK(sc[i][1] == doctest::Approx(sc[i + 1][1]));
    CHECK(sc[i][2] < sc[i + 1][2]);
  }
}

TEST_CASE("shadow_boundary of a discretized sphere hugs the equator") {
  int n = 500;
  Polytope ball = make_ball(Vec(0, 0, 0), 1.0, n, 0);
  Points sb = shadow_boundary(ball, Vec(0, 0, 1));
  CHECK(sb.size() >= 8);
  double band = 2.0 * 3.0 / std::sqrt(static_cast<double>(n));
  for (const Vec& v : sb) CHECK(std::abs(v[2]) < band);
}

TEST_CASE("ball_section_area closed forms") {
  Hyperplane z0(Vec(0, 0, 1), 0.0);
  CHECK(ball_section_area(1.0, Vec(0, 0, 0), z0) == doctest::Approx(std::numbers::pi));
  CHECK(ball_section_area(1.0, Vec(0, 0, 0.6), z0) ==
        doctest::Approx(0.64 * std::numbers::pi));
  CHECK(ball_section_area(1.0, Vec(0, 0, 1.5), z0) == 0.0);
  CHECK(ball_section_area(1.0, Vec(0, 0, 1.0), z0) == 0.0);
  CHECK_THROWS_AS(ball_section_area(0.0, Vec(0, 0, 0), z0), Error);
}

TEST_CASE("ball_section_area matches Monte-Carlo") {
  Hyperplane z0(Vec(0, 0, 1), 0.0);
  double closed = ball_section_area(1.0, Vec(0, 0, 0.6), z0);
  double mc = oracle::mc_ball_section_area(1.0, Vec(0, 0, 0.6), z0, 2000000, 99);
  CHECK(std::abs(closed - mc) < 5e-3);
}

TEST_CASE("ball_section_area decreases with distance") {
  Hyperplane z0(Vec(0, 0, 1), 0.0);
  double prev = ball_section_area(1.0, Vec(0, 0, 0.0), z0);
  for (double d = 0.1; d < 1.0; d += 0.1) {
    double a = ball_section_area(1.0, Vec(0, 0, d), z0);
    CHECK(a < prev);
    prev = a;
  }
}

TEST_CASE("chord of simple polygons") {
  Polygon2 sq;
  sq.verts = {Vec(0.0, 0.0), Vec(1.0, 0.0), Vec(1.0, 1.0), Vec(0.0, 1.0)};
  Chord c = chord(sq, Vec(0.5, 0.5), Vec(0, 1));
  REQUIRE_FALSE(c.empty);
  CHECK(c.length() == doctest::Approx(1.0));
  CHECK(distance(c.a, Vec(0.5, 0.0)) < 1e-14);
  CHECK(distance(c.b, Vec(0.5, 1.0)) < 1e-14);

  CHECK(chord(sq, Vec(2.0, 0.5), Vec(0, 1)).empty);
}

TEST_CASE("chord matches edge-intersection oracle") {
  Rng rng(505);
  Polygon2 hex = regular_polygon(6, 1.0);
  for (int i = 0; i < 60; ++i) {
    Vec through(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4));
    double a = rng.uniform(0.0, std::numbers::pi);
    Vec dir(std::cos(a), std::sin(a));
    Chord mine = chord(hex, through, dir);
    Chord ref = oracle::chord_by_edge_intersections(hex, through, dir);
    REQUIRE_FALSE(mine.empty);
    REQUIRE_FALSE(ref.empty);
    CHECK(distance(mine.a, ref.a) < 1e-12);
    CHECK(distance(mine.b, ref.b) < 1e-12);
  }
}

TEST_CASE("parallel chord lengths are unimodal (Brunn)") {
  Rng rng(606);
  Points cloud;
  for (int i = 0; i < 24; ++i) cloud.push_back(Vec(rng.normal(), rng.normal()));
  Polygon2 poly = hull2(cloud);
  REQUIRE(poly.size() >= 3);
  Vec dir(0.3, 1.0);
  Vec step = normalized(perp2(dir));
  std::vector<double> lens;
  for (double s = -3.0; s <= 3.0; s += 0.05) {
    Chord c = chord(poly, s * step, dir);
    lens.push_back(c.length());
  }
  size_t peak = static_cast<size_t>(std::max_element(lens.begin(), lens.end()) - lens.begin());
  for (size_t i = 1; i <= peak; ++i) CHECK(lens[i] >= lens[i - 1] - 1e-9);
  for (size_t i = peak + 1; i < lens.size(); ++i) CHECK(lens[i] <= lens[i - 1] + 1e-9);
}

TEST_CASE("hausdorff2 known values") {
  Polygon2 sq;
  sq.verts = {Vec(0.0, 0.0), Vec(1.0, 0.0), Vec(1.0, 1.0), Vec(0.0, 1.0)};
  CHECK(hausdorff2(sq, sq) == 0.0);

  Polygon2 moved = sq;
  for (Vec& v : moved.verts) v += Vec(0.1, 0.0);
  CHECK(hausdorff2(sq, moved) == doctest::Approx(0.1));

  // Square vs its 45-degree rotation about the common center.
  Polygon2 rot;
  double h = std::sqrt(0.5);
  rot.verts = {Vec(0.5 + h, 0.5), Vec(0.5, 0.5 + h), Vec(0.5 - h, 0.5), Vec(0.5, 0.5 - h)};
  double expected = (std::sqrt(2.0) - 1.0) / 2.0;  // frozen from the sampling oracle
  CHECK(hausdorff2(sq, rot) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(std::abs(oracle::hausdorff_by_boundary_sampling(sq, rot) - expected) < 1e-3);
}

TEST_CASE("hausdorff2 metric properties") {
  Rng rng(707);
  for (int i = 0; i < 20; ++i) {
    auto rand_poly = [&] {
      Points c;
      for (int k = 0; k < 12; ++k) c.push_back(Vec(rng.normal(), rng.normal()));
      return hull2(c);
    };
    Polygon2 a = rand_poly(), b = rand_poly(), c = rand_poly();
    double ab = hausdorff2(a, b), ba = hausdorff2(b, a);
    CHECK(ab == ba);
    CHECK(hausdorff2(a, c) <= ab + hausdorff2(b, c) + 1e-12);
  }
}

TEST_CASE("make_ball vertices sit on the sphere") {
  Polytope ball = make_ball(Vec(0.5, -0.25, 1.0), 2.0, 300, 42);
  CHECK(ball.vertices.size() == 300);
  for (const Vec& v : ball.vertices)
    CHECK(std::abs(distance(v, Vec(0.5, -0.25, 1.0)) - 2.0) < 1e-12);
}

TEST_CASE("make_mirror_pair mirrors the vertex list exactly") {
  Polytope k1 = make_random_polytope(99, 30, ShapeClass::on_sphere, 3, 1.0, Vec(0, 0, 0.4));
  Hyperplane h(Vec(0, 0, 1), 0.0);
  auto [a, b] = make_mirror_pair(k1, h);
  REQUIRE(a.vertices.size() == b.vertices.size());
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    CHECK(b.vertices[i][0] == a.vertices[i][0]);
    CHECK(b.vertices[i][1] == a.vertices[i][1]);
    CHECK(b.vertices[i][2] == -a.vertices[i][2]);
  }
}

TEST_CASE("make_revolution_body sections are round") {
  std::vector<std::pair<double, double>> profile;
  for (int i = 0; i <= 8; ++i) {
    double z = -0.9 + 1.8 * i / 8.0;
    profile.push_back({std::sqrt(1.0 - z * z), z});
  }
  profile.push_back({0.0, 1.0});
  profile.push_back({0.0, -1.0});
  Polytope body = make_revolution_body(profile, 24);
  CHECK(volume(body) > 3.0);  // near the ball volume 4pi/3

  EmbeddedSection s = plane_section(body, Hyperplane(Vec(0, 0, 1), 0.1));
  REQUIRE(s.poly.size() >= 12);
  // Vertices of an intermediate section share one radius.
  double rmin = 1e9, rmax = 0.0;
  for (const Vec& v3 : s.verts3()) {
    double r = std::hypot(v3[0], v3[1]);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  CHECK(rmax - rmin < 2e-3);
}

TEST_CASE("make_random_polytope is deterministic per seed") {
  Polytope a = make_random_polytope(1234, 25, ShapeClass::on_sphere);
  Polytope b = make_random_polytope(1234, 25, ShapeClass::on_sphere);
  REQUIRE(a.vertices.size() == b.vertices.size());
  for (size_t i = 0; i < a.vertices.size(); ++i)
    CHECK(distance(a.vertices[i], b.vertices[i]) == 0.0);
  Polytope c = make_random_polytope(1235, 25, ShapeClass::on_sphere);
  bool same = c.vertices.size() == a.vertices.size();
  if (same) {
    bool all = true;
    for (size_t i = 0; i < a.vertices.size(); ++i)
      if (distance(a.vertices[i], c.vertices[i]) != 0.0) all = false;
    same = all;
  }
  CHECK_FALSE(same);
}
