#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "mirrortomo/geometry.hpp"
#include "mirrortomo/polygon.hpp"

namespace mtomo {

// Convex polytope given by its extreme vertices. Full-dimensional 3D bodies
// carry a triangle mesh of the boundary (used for sectioning); flat bodies
// (projections onto a hyperplane) and 4D bodies carry vertices only.
struct Polytope {
  int dim = 3;
  bool full_dim = true;
  Points vertices;

  // Boundary mesh over the deduped input cloud. mesh_pts can contain
  // non-extreme points that lie on the hull boundary; that is harmless for
  // sectioning and they are excluded from `vertices`.
  Points mesh_pts;
  std::vector<std::array<int, 3>> mesh_faces;
  std::vector<std::pair<int, int>> mesh_edges;
  std::vector<Hyperplane> facet_planes;

  double diameter() const { return mtomo::diameter(vertices); }
  // Max signed distance to the facet planes; negative strictly inside.
  double signed_gap(const Vec& p) const;
};

// Convex hull, dim 2 or 3. Requires an affinely independent spanning subset
// (DegenerateInput otherwise). Deterministic: identical input produces
// identical output; kept vertices preserve input order.
Polytope convex_hull(const Points& pts, int dim);

// Lenient variant of the 3D hull used internally by generators.
Polytope make_polytope3(const Points& pts);

double volume(const Polytope& body);

struct EmbeddedSection {
  SectionFrame frame;
  Polygon2 poly;

  bool empty() const { return poly.empty(); }
  Vec vertex3(size_t i) const { return frame.embed(poly.verts[i]); }
  Points verts3() const;
};

// Section of a full-dimensional 3D body by a plane: edge/plane crossings plus
// on-plane vertices, convex-hulled in section_frame(plane, body centroid).
EmbeddedSection plane_section(const Polytope& body, const Hyperplane& plane);

EmbeddedSection reflect_section(const Hyperplane& mirror, const EmbeddedSection& s);

// Exact Hausdorff distance between two embedded planar convex sets in 3-space.
double hausdorff_sections(const EmbeddedSection& a, const EmbeddedSection& b);

// Hull of the vertex projections onto the target hyperplane; result is flagged
// lower-dimensional, coordinates stay in the ambient space.
Polytope orthogonal_projection_body(const Polytope& body, const Hyperplane& target);

// Central projection from `center` onto `target`, as a polygon in
// section_frame(target, ambient origin). Throws UnboundedProjection if a ray
// center->vertex is parallel to the target or leaves it behind the center.
Polygon2 central_projection(const Polytope& body, const Vec& center, const Hyperplane& target);

// Vertices whose projection along dir is extreme: all vertices in the columns
// over the corners of the projected hull (columns merge projections within
// 1e-9), in hull-corner order, bottom to top along dir within a column.
Points shadow_boundary(const Polytope& body, const Vec& dir);

// Area of the section of a ball by a plane: pi (r^2 - d^2) for d < r, else 0.
double ball_section_area(double radius, const Vec& center, const Hyperplane& plane);

// ---- generators ----------------------------------------------------------

// Fibonacci sphere point set, optionally re-oriented by a seeded rotation.
// Every vertex lies at distance r from the center (up to roundoff).
Polytope make_ball(const Vec& center, double r, int n, uint64_t seed = 0);

Polytope make_ellipsoid(double a, double b, double c, int n, const Vec& center = Vec(0, 0, 0),
                        uint64_t seed = 0);

// Body of revolution about the z axis: an n-gon ring per profile entry
// (radius, height); zero radius contributes the single pole point.
Polytope make_revolution_body(const std::vector<std::pair<double, double>>& profile, int n);

enum class ShapeClass { on_sphere, in_ball, in_cube };

Polytope make_random_polytope(uint64_t seed, int n, ShapeClass shape, int dim = 3,
                              double scale = 1.0, const Vec& center = Vec(0, 0, 0));

Polytope reflect_polytope(const Hyperplane& mirror, const Polytope& body);

// (body, exact mirror image): the second vertex list is the reflected first
// list, entry by entry.
std::pair<Polytope, Polytope> make_mirror_pair(const Polytope& body, const Hyperplane& mirror);

Polytope rotate_polytope(const Polytope& body, const Vec& axis, double degrees,
                         const Vec& pivot = Vec(0, 0, 0));

Polytope translate_polytope(const Polytope& body, const Vec& shift);

}  // namespace mtomo
