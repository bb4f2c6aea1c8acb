#pragma once

#include <optional>
#include <vector>

#include "mirrortomo/vec.hpp"

namespace mtomo {

// Line in n-space: base point plus unit direction.
struct Line {
  Vec base;
  Vec dir;

  Line() = default;
  Line(const Vec& b, const Vec& d) : base(b), dir(normalized(d)) {}

  Vec at(double t) const { return base + t * dir; }
};

// Hyperplane { x : <normal, x> = offset } with unit normal. The pair
// (normal, offset) and (-normal, -offset) denote the same plane; equality and
// the operations below treat them as such.
struct Hyperplane {
  Vec normal;
  double offset = 0.0;

  Hyperplane() = default;
  Hyperplane(const Vec& n, double off) : normal(normalized(n)), offset(off / norm(n)) {}

  static Hyperplane from_unit(const Vec& n, double off) {
    Hyperplane h;
    h.normal = n;
    h.offset = off;
    return h;
  }

  int dim() const { return normal.dim; }
  double signed_distance(const Vec& p) const { return dot(normal, p) - offset; }
};

bool plane_equal(const Hyperplane& a, const Hyperplane& b);

// Orthonormal in-plane frame of a hyperplane in 3-space. embed() and project()
// convert between in-plane (u, v) coordinates and ambient points.
struct SectionFrame {
  Vec origin;
  Vec e1;
  Vec e2;

  Vec embed(double u, double v) const { return origin + u * e1 + v * e2; }
  Vec embed(const Vec& uv) const { return embed(uv[0], uv[1]); }
  Vec project(const Vec& p) const { return Vec(dot(p - origin, e1), dot(p - origin, e2)); }
};

// General affine frame of a k-flat in n-space (used for hyperplanes in 4-space).
struct AffineFrame {
  Vec origin;
  std::vector<Vec> basis;

  Vec embed(const Vec& coords) const {
    Vec p = origin;
    for (size_t i = 0; i < basis.size(); ++i) p += coords[static_cast<int>(i)] * basis[i];
    return p;
  }
  Vec coords(const Vec& p) const {
    Vec r = Vec::zero(static_cast<int>(basis.size()) < 2 ? 2 : static_cast<int>(basis.size()));
    r.dim = static_cast<int>(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) r[static_cast<int>(i)] = dot(p - origin, basis[i]);
    return r;
  }
};

Vec reflect_point(const Hyperplane& mirror, const Vec& p);
Vec reflect_direction(const Hyperplane& mirror, const Vec& d);
Hyperplane reflect_plane(const Hyperplane& mirror, const Hyperplane& p);
Line reflect_line(const Hyperplane& mirror, const Line& l);

Vec orthogonal_project_point(const Hyperplane& target, const Vec& p);

// Plane spanned by a line and an off-line point (3-space).
// Throws DegenerateSpan if the point lies on the line.
Hyperplane plane_through(const Vec& point, const Line& line);

// The two dihedral bisector planes of two planes through a common line.
// For coincident planes returns {plane, plane perpendicular to it through the
// line}. Throws LineNotOnPlane if either plane misses the line.
std::vector<Hyperplane> dihedral_bisectors(const Hyperplane& a, const Hyperplane& b,
                                           const Line& common);

// Deterministic in-plane frame: origin is hint_origin projected onto the
// plane; e1 is the normalized in-plane projection of the global axis least
// aligned with the normal; e2 = normal x e1.
SectionFrame section_frame(const Hyperplane& plane, const Vec& hint_origin);

// Same construction for a hyperplane in n-space: n-1 basis vectors obtained by
// Gram-Schmidt over global axes ordered by increasing alignment with the normal.
AffineFrame hyperplane_frame(const Hyperplane& plane, const Vec& hint_origin);

std::optional<Vec> line_plane_intersection(const Line& l, const Hyperplane& h,
                                           double parallel_tol = 1e-12);

}  // namespace mtomo
