#include "mirrortomo/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace mtomo {

bool plane_equal(const Hyperplane& a, const Hyperplane& b) {
  double c = dot(a.normal, b.normal);
  if (std::abs(c) <= 1.0 - 1e-10) return false;
  double sign = c > 0.0 ? 1.0 : -1.0;
  return std::abs(a.offset - sign * b.offset) < 1e-9 * (1.0 + std::abs(a.offset));
}

Vec reflect_point(const Hyperplane& mirror, const Vec& p) {
  return p - 2.0 * mirror.signed_distance(p) * mirror.normal;
}

Vec reflect_direction(const Hyperplane& mirror, const Vec& d) {
  return d - 2.0 * dot(mirror.normal, d) * mirror.normal;
}

Hyperplane reflect_plane(const Hyperplane& mirror, const Hyperplane& p) {
  Vec n = reflect_direction(mirror, p.normal);
  Vec q = reflect_point(mirror, p.normal * p.offset);
  return Hyperplane::from_unit(n, dot(n, q));
}

Line reflect_line(const Hyperplane& mirror, const Line& l) {
  Line r;
  r.base = reflect_point(mirror, l.base);
  r.dir = reflect_direction(mirror, l.dir);
  return r;
}

Vec orthogonal_project_point(const Hyperplane& target, const Vec& p) {
  return p - target.signed_distance(p) * target.normal;
}

Hyperplane plane_through(const Vec& point, const Line& line) {
  Vec v = point - line.base;
  Vec n = cross(line.dir, v);
  double rel = norm(n) / std::max(1.0, norm(v));
  require(rel > 1e-12, errc::degenerate_span, "point lies on the line");
  n = normalized(n);
  return Hyperplane::from_unit(n, dot(n, line.base));
}

std::vector<Hyperplane> dihedral_bisectors(const Hyperplane& a, const Hyperplane& b,
                                           const Line& common) {
  for (const Hyperplane* h : {&a, &b}) {
    double r = std::max(std::abs(h->signed_distance(common.base)),
                        std::abs(h->signed_distance(common.base + common.dir)));
    require(r < 1e-9, errc::line_not_on_plane, "plane does not contain the common line");
  }

  if (plane_equal(a, b)) {
    Vec n = normalized(cross(common.dir, a.normal));
    return {a, Hyperplane::from_unit(n, dot(n, common.base))};
  }

  std::vector<Hyperplane> out;
  for (double s : {1.0, -1.0}) {
    Vec n = a.normal + s * b.normal;
    double len = norm(n);
    if (len < 1e-6) continue;
    n = n / len;
    out.push_back(Hyperplane::from_unit(n, dot(n, common.base)));
  }
  return out;
}

namespace {

// Global axes ordered by |normal . axis| ascending, ties by index.
std::vector<int> axes_by_alignment(const Vec& normal) {
  std::vector<int> idx(static_cast<size_t>(normal.dim));
  for (int i = 0; i < normal.dim; ++i) idx[static_cast<size_t>(i)] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return std::abs(normal[i]) < std::abs(normal[j]);
  });
  return idx;
}

}  // namespace

SectionFrame section_frame(const Hyperplane& plane, const Vec& hint_origin) {
  SectionFrame f;
  f.origin = orthogonal_project_point(plane, hint_origin);
  int k = axes_by_alignment(plane.normal).front();
  Vec e = Vec::axis(k, 3);
  f.e1 = normalized(e - dot(e, plane.normal) * plane.normal);
  f.e2 = cross(plane.normal, f.e1);
  return f;
}

AffineFrame hyperplane_frame(const Hyperplane& plane, const Vec& hint_origin) {
  if (plane.dim() == 3) {
    SectionFrame f = section_frame(plane, hint_origin);
    return AffineFrame{f.origin, {f.e1, f.e2}};
  }
  AffineFrame f;
  f.origin = orthogonal_project_point(plane, hint_origin);
  std::vector<int> order = axes_by_alignment(plane.normal);
  for (int i = 0; i + 1 < plane.dim(); ++i) {
    Vec e = Vec::axis(order[static_cast<size_t>(i)], plane.dim());
    e -= dot(e, plane.normal) * plane.normal;
    for (const Vec& b : f.basis) e -= dot(e, b) * b;
    f.basis.push_back(normalized(e));
  }
  return f;
}

std::optional<Vec> line_plane_intersection(const Line& l, const Hyperplane& h,
                                           double parallel_tol) {
  double denom = dot(h.normal, l.dir);
  if (std::abs(denom) < parallel_tol) return std::nullopt;
  double t = -h.signed_distance(l.base) / denom;
  return l.at(t);
}

}  // namespace mtomo
