#pragma once

#include <vector>

#include "mirrortomo/vec.hpp"

namespace mtomo {

// Convex polygon, CCW vertex cycle, extreme vertices only. Results of
// sectioning may be degenerate (0, 1 or 2 vertices); operations that need a
// proper polygon say so.
struct Polygon2 {
  Points verts;

  bool empty() const { return verts.empty(); }
  size_t size() const { return verts.size(); }

  double area() const;
  double diameter() const { return mtomo::diameter(verts); }

  // Signed inner margin: smallest signed distance of p to the edge lines
  // (positive strictly inside). Degenerate polygons give -distance to them.
  double inner_margin(const Vec& p) const;
  bool contains(const Vec& p, double margin = 0.0) const { return inner_margin(p) >= margin; }
};

// Convex hull of 2D points, lenient: collinear input yields the 2 extreme
// points, a single cluster yields 1. Dedup at 1e-12 of the bbox diagonal.
// Output starts at the lexicographically smallest vertex.
Polygon2 hull2(const Points& pts);

struct Chord {
  Vec a, b;      // endpoints, ordered along the chord direction
  bool empty = true;

  double length() const { return empty ? 0.0 : distance(a, b); }
};

// Intersection of the line through `through` along `dir` with the polygon.
Chord chord(const Polygon2& poly, const Vec& through, const Vec& dir);

double point_polygon_distance(const Vec& p, const Polygon2& poly);

// Hausdorff distance between convex polygons (exact for convex sets: the
// farthest point of one set from the other is always one of its vertices).
double hausdorff2(const Polygon2& a, const Polygon2& b);

// Plain point-set Hausdorff (max over points of min pairwise distance).
double hausdorff_points(const Points& a, const Points& b);

}  // namespace mtomo
