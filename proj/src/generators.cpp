#include <cmath>
#include <numbers>

#include "mirrortomo/polytope.hpp"
#include "mirrortomo/rng.hpp"

namespace mtomo {

namespace {

struct Rot3 {
  std::array<Vec, 3> rows;
  Vec apply(const Vec& v) const {
    return Vec(dot(rows[0], v), dot(rows[1], v), dot(rows[2], v));
  }
};

Rot3 seeded_rotation(uint64_t seed, std::string_view label) {
  Rng rng(seed, label);
  // Uniform rotation from a random unit quaternion.
  double q0, q1, q2, q3, n2;
  do {
    q0 = rng.normal();
    q1 = rng.normal();
    q2 = rng.normal();
    q3 = rng.normal();
    n2 = q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3;
  } while (n2 < 1e-12);
  double s = 1.0 / std::sqrt(n2);
  q0 *= s;
  q1 *= s;
  q2 *= s;
  q3 *= s;
  Rot3 r;
  r.rows[0] = Vec(1 - 2 * (q2 * q2 + q3 * q3), 2 * (q1 * q2 - q0 * q3), 2 * (q1 * q3 + q0 * q2));
  r.rows[1] = Vec(2 * (q1 * q2 + q0 * q3), 1 - 2 * (q1 * q1 + q3 * q3), 2 * (q2 * q3 - q0 * q1));
  r.rows[2] = Vec(2 * (q1 * q3 - q0 * q2), 2 * (q2 * q3 + q0 * q1), 1 - 2 * (q1 * q1 + q2 * q2));
  return r;
}

Points fibonacci_sphere(int n) {
  require(n >= 4, errc::bad_parameters, "need at least 4 points");
  Points pts;
  pts.reserve(static_cast<size_t>(n));
  const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / n;
    double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double a = ga * i;
    pts.push_back(Vec(rho * std::cos(a), rho * std::sin(a), z));
  }
  return pts;
}

}  // namespace

Polytope make_ball(const Vec& center, double r, int n, uint64_t seed) {
  require(r > 0.0, errc::bad_parameters, "radius must be positive");
  Rot3 rot = seeded_rotation(seed, "ball_rotation");
  Points pts = fibonacci_sphere(n);
  for (Vec& p : pts) p = center + r * rot.apply(p);
  return make_polytope3(pts);
}

Polytope make_ellipsoid(double a, double b, double c, int n, const Vec& center, uint64_t seed) {
  require(a > 0.0 && b > 0.0 && c > 0.0, errc::bad_parameters, "semiaxes must be positive");
  Rot3 rot = seeded_rotation(seed, "ellipsoid_rotation");
  Points pts = fibonacci_sphere(n);
  for (Vec& p : pts) {
    Vec q = rot.apply(p);
    p = center + Vec(a * q[0], b * q[1], c * q[2]);
  }
  return make_polytope3(pts);
}

Polytope make_revolution_body(const std::vector<std::pair<double, double>>& profile, int n) {
  require(profile.size() >= 2, errc::bad_parameters, "profile needs at least 2 entries");
  require(n >= 3, errc::bad_parameters, "ring resolution must be at least 3");
  Points pts;
  const double tau = 2.0 * std::numbers::pi;
  for (const auto& [radius, height] : profile) {
    require(radius >= 0.0, errc::bad_parameters, "profile radius must be non-negative");
    if (radius == 0.0) {
      pts.push_back(Vec(0.0, 0.0, height));
      continue;
    }
    for (int j = 0; j < n; ++j) {
      double a = tau * j / n;
      pts.push_back(Vec(radius * std::cos(a), radius * std::sin(a), height));
    }
  }
  return make_polytope3(pts);
}

Polytope make_random_polytope(uint64_t seed, int n, ShapeClass shape, int dim, double scale,
                              const Vec& center) {
  require(dim == 3 || dim == 4, errc::bad_parameters, "dim must be 3 or 4");
  require(n >= dim + 1, errc::bad_parameters, "need at least dim+1 points");
  require(dim == 3 || shape == ShapeClass::on_sphere, errc::bad_parameters,
          "4D random polytopes support only the on_sphere shape");
  Rng rng(seed, "random_polytope");

  Points pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec v = Vec::zero(dim);
    switch (shape) {
      case ShapeClass::on_sphere:
      case ShapeClass::in_ball: {
        double m2;
        do {
          for (int k = 0; k < dim; ++k) v[k] = rng.normal();
          m2 = norm2(v);
        } while (m2 < 1e-12);
        v = v / std::sqrt(m2);
        if (shape == ShapeClass::in_ball)
          v *= std::pow(rng.uniform(), 1.0 / dim);
        break;
      }
      case ShapeClass::in_cube:
        for (int k = 0; k < dim; ++k) v[k] = rng.uniform(-1.0, 1.0);
        break;
    }
    Vec c = center;
    c.dim = dim;
    pts.push_back(c + scale * v);
  }

  if (dim == 3) return make_polytope3(pts);
  Polytope body;
  body.dim = 4;
  body.full_dim = true;
  body.vertices = pts;
  return body;
}

Polytope reflect_polytope(const Hyperplane& mirror, const Polytope& body) {
  Polytope out;
  out.dim = body.dim;
  out.full_dim = body.full_dim;
  out.vertices.reserve(body.vertices.size());
  for (const Vec& v : body.vertices) out.vertices.push_back(reflect_point(mirror, v));
  if (body.dim == 3 && body.full_dim) {
    Polytope hulled = make_polytope3(out.vertices);
    require(hulled.vertices.size() == out.vertices.size(), errc::degenerate_input,
            "reflected vertex set is not in convex position");
    out.mesh_pts = hulled.mesh_pts;
    out.mesh_faces = hulled.mesh_faces;
    out.mesh_edges = hulled.mesh_edges;
    out.facet_planes = hulled.facet_planes;
  }
  return out;
}

std::pair<Polytope, Polytope> make_mirror_pair(const Polytope& body, const Hyperplane& mirror) {
  return {body, reflect_polytope(mirror, body)};
}

Polytope rotate_polytope(const Polytope& body, const Vec& axis, double degrees, const Vec& pivot) {
  Vec u = normalized(axis);
  double a = degrees * std::numbers::pi / 180.0;
  double c = std::cos(a), s = std::sin(a);
  Points pts;
  pts.reserve(body.vertices.size());
  for (const Vec& v : body.vertices) {
    Vec r = v - pivot;
    Vec rot = r * c + cross(u, r) * s + u * (dot(u, r) * (1.0 - c));
    pts.push_back(pivot + rot);
  }
  if (body.dim == 3 && body.full_dim) return make_polytope3(pts);
  Polytope out;
  out.dim = body.dim;
  out.full_dim = body.full_dim;
  out.vertices = pts;
  return out;
}

Polytope translate_polytope(const Polytope& body, const Vec& shift) {
  Polytope out = body;
  for (Vec& v : out.vertices) v += shift;
  for (Vec& v : out.mesh_pts) v += shift;
  for (Hyperplane& h : out.facet_planes)
    h = Hyperplane::from_unit(h.normal, h.offset + dot(h.normal, shift));
  return out;
}

}  // namespace mtomo
