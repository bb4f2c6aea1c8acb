#include "mirrortomo/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mtomo {

Points EmbeddedSection::verts3() const {
  Points out;
  out.reserve(poly.size());
  for (const Vec& v : poly.verts) out.push_back(frame.embed(v));
  return out;
}

EmbeddedSection plane_section(const Polytope& body, const Hyperplane& plane) {
  require(body.dim == 3 && body.full_dim, errc::bad_configuration,
          "plane_section needs a full-dimensional 3D body");
  EmbeddedSection sec;
  sec.frame = section_frame(plane, centroid(body.vertices));

  double scale = std::max(bbox_diagonal(body.mesh_pts), 1e-300);
  double eps_on = 1e-12 * scale;

  std::vector<double> s(body.mesh_pts.size());
  for (size_t i = 0; i < body.mesh_pts.size(); ++i)
    s[i] = plane.signed_distance(body.mesh_pts[i]);

  Points hits;
  for (size_t i = 0; i < body.mesh_pts.size(); ++i)
    if (std::abs(s[i]) <= eps_on) hits.push_back(body.mesh_pts[i]);
  for (const auto& [a, b] : body.mesh_edges) {
    double sa = s[static_cast<size_t>(a)], sb = s[static_cast<size_t>(b)];
    if (std::abs(sa) <= eps_on || std::abs(sb) <= eps_on) continue;
    if ((sa > 0.0) == (sb > 0.0)) continue;
    double t = sa / (sa - sb);
    hits.push_back(body.mesh_pts[static_cast<size_t>(a)] +
                   t * (body.mesh_pts[static_cast<size_t>(b)] - body.mesh_pts[static_cast<size_t>(a)]));
  }
  if (hits.empty()) return sec;

  Points uv;
  uv.reserve(hits.size());
  for (const Vec& h : hits) uv.push_back(sec.frame.project(h));
  sec.poly = hull2(uv);
  return sec;
}

EmbeddedSection reflect_section(const Hyperplane& mirror, const EmbeddedSection& s) {
  EmbeddedSection r;
  r.frame.origin = reflect_point(mirror, s.frame.origin);
  r.frame.e1 = reflect_direction(mirror, s.frame.e1);
  r.frame.e2 = reflect_direction(mirror, s.frame.e2);
  r.poly = s.poly;
  return r;
}

namespace {

double point_section_distance(const Vec& p, const EmbeddedSection& s) {
  Vec uv = s.frame.project(p);
  double off_plane = distance(p, s.frame.embed(uv));
  double in_plane = point_polygon_distance(uv, s.poly);
  return std::hypot(off_plane, in_plane);
}

}  // namespace

double hausdorff_sections(const EmbeddedSection& a, const EmbeddedSection& b) {
  require(!a.empty() && !b.empty(), errc::empty_operand, "hausdorff of empty section");
  double h = 0.0;
  for (size_t i = 0; i < a.poly.size(); ++i)
    h = std::max(h, point_section_distance(a.vertex3(i), b));
  for (size_t i = 0; i < b.poly.size(); ++i)
    h = std::max(h, point_section_distance(b.vertex3(i), a));
  return h;
}

Polytope orthogonal_projection_body(const Polytope& body, const Hyperplane& target) {
  require(body.dim == target.dim(), errc::bad_parameters, "dimension mismatch");
  AffineFrame frame = hyperplane_frame(target, centroid(body.vertices));

  Points coords;
  coords.reserve(body.vertices.size());
  for (const Vec& v : body.vertices) coords.push_back(frame.coords(orthogonal_project_point(target, v)));

  Polytope out;
  out.dim = body.dim;
  out.full_dim = false;
  if (body.dim == 3) {
    Polygon2 h = hull2(coords);
    require(h.size() >= 1, errc::degenerate_input, "empty projection");
    for (const Vec& uv : h.verts) out.vertices.push_back(frame.embed(uv));
  } else {
    Polytope h = make_polytope3(coords);
    for (const Vec& c : h.vertices) out.vertices.push_back(frame.embed(c));
  }
  return out;
}

Polygon2 central_projection(const Polytope& body, const Vec& center, const Hyperplane& target) {
  require(std::abs(target.signed_distance(center)) > 1e-9 * (1.0 + std::abs(target.offset)),
          errc::bad_configuration, "projection center lies on the target plane");
  double scale = std::max(bbox_diagonal(body.vertices), 1e-300);
  double side_target = target.offset - dot(target.normal, center);

  SectionFrame frame = section_frame(target, Vec::zero(3));
  Points uv;
  uv.reserve(body.vertices.size());
  for (const Vec& v : body.vertices) {
    double denom = dot(target.normal, v - center);
    require(std::abs(denom) > 1e-12 * scale, errc::unbounded_projection,
            "ray through a vertex is parallel to the target plane");
    double t = side_target / denom;
    require(t > 0.0, errc::unbounded_projection,
            "body crosses the plane through the center parallel to the target");
    uv.push_back(frame.project(center + t * (v - center)));
  }
  return hull2(uv);
}

Points shadow_boundary(const Polytope& body, const Vec& dir) {
  require(body.dim == 3 && body.full_dim, errc::bad_configuration,
          "shadow_boundary needs a full-dimensional 3D body");
  Vec u = normalized(dir);
  SectionFrame frame = section_frame(Hyperplane::from_unit(u, 0.0), centroid(body.vertices));

  Points uv;
  uv.reserve(body.vertices.size());
  for (const Vec& v : body.vertices) uv.push_back(frame.project(v));
  Polygon2 hull = hull2(uv);

  Points out;
  for (const Vec& corner : hull.verts) {
    std::vector<size_t> column;
    for (size_t i = 0; i < uv.size(); ++i)
      if (distance(uv[i], corner) <= 1e-9) column.push_back(i);
    std::stable_sort(column.begin(), column.end(), [&](size_t i, size_t j) {
      return dot(body.vertices[i], u) < dot(body.vertices[j], u);
    });
    for (size_t i : column) out.push_back(body.vertices[i]);
  }
  return out;
}

double ball_section_area(double radius, const Vec& center, const Hyperplane& plane) {
  require(radius > 0.0, errc::bad_parameters, "radius must be positive");
  double d = std::abs(plane.signed_distance(center));
  if (d >= radius) return 0.0;
  return std::numbers::pi * (radius * radius - d * d);
}

}  // namespace mtomo
