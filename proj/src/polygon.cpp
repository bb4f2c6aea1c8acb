#include "mirrortomo/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mtomo {

double Polygon2::area() const {
  double s = 0.0;
  for (size_t i = 0; i < verts.size(); ++i) {
    const Vec& p = verts[i];
    const Vec& q = verts[(i + 1) % verts.size()];
    s += cross2(p, q);
  }
  return 0.5 * s;
}

namespace {

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b) {
  Vec ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.0) return distance(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

}  // namespace

double Polygon2::inner_margin(const Vec& p) const {
  if (verts.empty()) return -std::numeric_limits<double>::infinity();
  if (verts.size() == 1) return -distance(p, verts[0]);
  if (verts.size() == 2) return -point_segment_distance(p, verts[0], verts[1]);
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < verts.size(); ++i) {
    const Vec& a = verts[i];
    const Vec& b = verts[(i + 1) % verts.size()];
    Vec e = b - a;
    double len = norm(e);
    if (len == 0.0) continue;
    m = std::min(m, cross2(e, p - a) / len);
  }
  return m;
}

Polygon2 hull2(const Points& pts) {
  Polygon2 poly;
  if (pts.empty()) return poly;

  double scale = bbox_diagonal(pts);
  double dedup = 1e-12 * std::max(scale, 1e-300);

  Points p;
  for (const Vec& v : pts) {
    bool dup = false;
    for (const Vec& u : p)
      if (distance(u, v) <= dedup) {
        dup = true;
        break;
      }
    if (!dup) p.push_back(Vec(v[0], v[1]));
  }
  std::sort(p.begin(), p.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  if (p.size() <= 2) {
    poly.verts = p;
    return poly;
  }

  double eps = 1e-12 * scale * scale;
  Points h(2 * p.size());
  size_t k = 0;
  for (const Vec& v : p) {  // lower chain
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], v - h[k - 2]) <= eps) --k;
    h[k++] = v;
  }
  size_t lower = k + 1;
  for (size_t i = p.size() - 1; i-- > 0;) {  // upper chain
    const Vec& v = p[i];
    while (k >= lower && cross2(h[k - 1] - h[k - 2], v - h[k - 2]) <= eps) --k;
    h[k++] = v;
  }
  h.resize(k - 1);
  poly.verts = h;
  return poly;
}

Chord chord(const Polygon2& poly, const Vec& through, const Vec& dir) {
  Chord out;
  if (poly.empty()) return out;
  Vec u = normalized(dir);

  if (poly.size() < 3) {
    // Degenerate polygon: intersect the line with the point/segment.
    double tol = 1e-12 * (1.0 + bbox_diagonal(poly.verts) + norm(through));
    if (poly.size() == 1) {
      if (std::abs(cross2(u, poly.verts[0] - through)) <= tol) {
        out.a = out.b = poly.verts[0];
        out.empty = false;
      }
      return out;
    }
    double ca = cross2(u, poly.verts[0] - through);
    double cb = cross2(u, poly.verts[1] - through);
    if (std::abs(ca) <= tol && std::abs(cb) <= tol) {
      out.a = poly.verts[0];
      out.b = poly.verts[1];
      if (dot(out.b - out.a, u) < 0.0) std::swap(out.a, out.b);
      out.empty = false;
    } else if ((ca <= tol && cb >= -tol) || (cb <= tol && ca >= -tol)) {
      double t = ca / (ca - cb);
      out.a = out.b = poly.verts[0] + t * (poly.verts[1] - poly.verts[0]);
      out.empty = false;
    }
    return out;
  }

  // Cyrus-Beck clipping of the parameter interval against the CCW edges.
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < poly.size(); ++i) {
    const Vec& a = poly.verts[i];
    const Vec& b = poly.verts[(i + 1) % poly.size()];
    Vec e = b - a;
    // Interior satisfies cross2(e, x - a) >= 0.
    double denom = cross2(e, u);
    double num = cross2(e, through - a);
    if (denom == 0.0) {
      if (num < 0.0) return out;
      continue;
    }
    double t = -num / denom;
    if (denom > 0.0)
      lo = std::max(lo, t);
    else
      hi = std::min(hi, t);
  }
  if (lo > hi) return out;
  out.a = through + lo * u;
  out.b = through + hi * u;
  out.empty = false;
  return out;
}

double point_polygon_distance(const Vec& p, const Polygon2& poly) {
  if (poly.empty()) return std::numeric_limits<double>::infinity();
  double m = poly.inner_margin(p);
  if (m >= 0.0) return 0.0;
  if (poly.size() <= 2) return -m;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < poly.size(); ++i)
    best = std::min(best, point_segment_distance(p, poly.verts[i],
                                                 poly.verts[(i + 1) % poly.size()]));
  return best;
}

double hausdorff2(const Polygon2& a, const Polygon2& b) {
  require(!a.empty() && !b.empty(), errc::empty_operand, "hausdorff of empty polygon");
  double h = 0.0;
  for (const Vec& v : a.verts) h = std::max(h, point_polygon_distance(v, b));
  for (const Vec& v : b.verts) h = std::max(h, point_polygon_distance(v, a));
  return h;
}

double hausdorff_points(const Points& a, const Points& b) {
  require(!a.empty() && !b.empty(), errc::empty_operand, "hausdorff of empty point set");
  double h = 0.0;
  for (const Points* from : {&a, &b}) {
    const Points& to = (from == &a) ? b : a;
    for (const Vec& v : *from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec& w : to) best = std::min(best, distance(v, w));
      h = std::max(h, best);
    }
  }
  return h;
}

}  // namespace mtomo
