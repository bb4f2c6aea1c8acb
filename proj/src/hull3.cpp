#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "mirrortomo/polytope.hpp"

namespace mtomo {

namespace {

struct Face {
  std::array<int, 3> v;
  Vec n;       // outward unit normal
  double off;  // plane offset
  bool alive = true;

  double dist(const Vec& p) const { return dot(n, p) - off; }
};

Vec face_normal(const Points& pts, int a, int b, int c) {
  return cross(pts[static_cast<size_t>(b)] - pts[static_cast<size_t>(a)],
               pts[static_cast<size_t>(c)] - pts[static_cast<size_t>(a)]);
}

Points dedup_points(const Points& pts, double tol) {
  Points out;
  for (const Vec& v : pts) {
    bool dup = false;
    for (const Vec& u : out)
      if (distance(u, v) <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(v);
  }
  return out;
}

// Greedy affinely independent seed: extreme pair, then max area, then max volume.
std::array<int, 4> initial_tetra(const Points& p, double scale) {
  int n = static_cast<int>(p.size());
  int i0 = 0, i1 = 0;
  double best = -1.0;
  for (int k = 1; k < n; ++k) {
    double d = norm2(p[static_cast<size_t>(k)] - p[0]);
    if (d > best) {
      best = d;
      i1 = k;
    }
  }
  // Improve the pair with one sweep from i1.
  i0 = i1;
  best = -1.0;
  for (int k = 0; k < n; ++k) {
    double d = norm2(p[static_cast<size_t>(k)] - p[static_cast<size_t>(i1)]);
    if (d > best) {
      best = d;
      i0 = k;
    }
  }
  require(std::sqrt(best) > 1e-12 * scale, errc::degenerate_input, "all points coincide");

  int i2 = -1;
  best = -1.0;
  for (int k = 0; k < n; ++k) {
    double a = norm2(cross(p[static_cast<size_t>(i1)] - p[static_cast<size_t>(i0)],
                           p[static_cast<size_t>(k)] - p[static_cast<size_t>(i0)]));
    if (a > best) {
      best = a;
      i2 = k;
    }
  }
  require(std::sqrt(best) > 1e-12 * scale * scale, errc::degenerate_input, "points are collinear");

  Vec nrm = face_normal(p, i0, i1, i2);
  int i3 = -1;
  best = -1.0;
  for (int k = 0; k < n; ++k) {
    double v = std::abs(dot(nrm, p[static_cast<size_t>(k)] - p[static_cast<size_t>(i0)]));
    if (v > best) {
      best = v;
      i3 = k;
    }
  }
  require(best / norm(nrm) > 1e-12 * scale, errc::degenerate_input, "points are coplanar");
  return {i0, i1, i2, i3};
}

}  // namespace

Polytope make_polytope3(const Points& input) {
  require(input.size() >= 4, errc::degenerate_input, "need at least 4 points");
  double scale = std::max(bbox_diagonal(input), 1e-300);
  Points p = dedup_points(input, 1e-12 * scale);
  require(p.size() >= 4, errc::degenerate_input, "need at least 4 distinct points");

  std::array<int, 4> t = initial_tetra(p, scale);
  Vec inner = (p[static_cast<size_t>(t[0])] + p[static_cast<size_t>(t[1])] +
               p[static_cast<size_t>(t[2])] + p[static_cast<size_t>(t[3])]) /
              4.0;

  std::vector<Face> faces;
  auto add_face = [&](int a, int b, int c) {
    Face f;
    f.v = {a, b, c};
    Vec n = face_normal(p, a, b, c);
    double len = norm(n);
    if (len <= 0.0) n = Vec(0, 0, 1);
    else n = n / len;
    double off = dot(n, p[static_cast<size_t>(a)]);
    if (dot(n, inner) - off > 0.0) {  // orient outward
      std::swap(f.v[1], f.v[2]);
      n = -n;
      off = -off;
    }
    f.n = n;
    f.off = off;
    faces.push_back(f);
  };

  add_face(t[0], t[1], t[2]);
  add_face(t[0], t[1], t[3]);
  add_face(t[0], t[2], t[3]);
  add_face(t[1], t[2], t[3]);

  double eps_vis = 1e-10 * scale;
  std::vector<bool> seeded(p.size(), false);
  for (int k : t) seeded[static_cast<size_t>(k)] = true;

  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (seeded[static_cast<size_t>(i)]) continue;
    const Vec& q = p[static_cast<size_t>(i)];

    std::map<std::pair<int, int>, int> edge_count;
    bool any = false;
    for (Face& f : faces) {
      if (!f.alive) continue;
      if (f.dist(q) > eps_vis) {
        f.alive = false;
        any = true;
        for (int e = 0; e < 3; ++e) {
          int a = f.v[static_cast<size_t>(e)];
          int b = f.v[static_cast<size_t>((e + 1) % 3)];
          edge_count[{std::min(a, b), std::max(a, b)}]++;
        }
      }
    }
    if (!any) continue;

    std::vector<std::pair<int, int>> horizon;
    // Recover directed horizon edges from the removed faces.
    // An undirected edge with count 1 is on the horizon; take its direction
    // from the removed face that contains it.
    for (const Face& f : faces) {
      if (f.alive) continue;
      for (int e = 0; e < 3; ++e) {
        int a = f.v[static_cast<size_t>(e)];
        int b = f.v[static_cast<size_t>((e + 1) % 3)];
        auto it = edge_count.find({std::min(a, b), std::max(a, b)});
        if (it != edge_count.end() && it->second == 1) horizon.push_back({a, b});
      }
    }

    faces.erase(std::remove_if(faces.begin(), faces.end(),
                               [](const Face& f) { return !f.alive; }),
                faces.end());
    for (auto [a, b] : horizon) add_face(a, b, i);
  }

  // Extreme vertices: incident to >= 3 distinct facet planes.
  std::vector<std::vector<int>> incident(p.size());
  std::vector<Hyperplane> planes;
  std::vector<int> face_plane(faces.size(), -1);
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    int found = -1;
    for (size_t pi = 0; pi < planes.size(); ++pi) {
      if (dot(planes[pi].normal, f.n) > 1.0 - 1e-8 &&
          std::abs(planes[pi].offset - f.off) < 1e-8 * scale + 1e-12) {
        found = static_cast<int>(pi);
        break;
      }
    }
    if (found < 0) {
      planes.push_back(Hyperplane::from_unit(f.n, f.off));
      found = static_cast<int>(planes.size()) - 1;
    }
    face_plane[fi] = found;
    for (int v : f.v) {
      auto& inc = incident[static_cast<size_t>(v)];
      if (std::find(inc.begin(), inc.end(), found) == inc.end()) inc.push_back(found);
    }
  }

  Polytope body;
  body.dim = 3;
  body.full_dim = true;
  body.mesh_pts = p;
  for (const Face& f : faces) body.mesh_faces.push_back(f.v);
  body.facet_planes = planes;

  std::vector<bool> used(p.size(), false);
  for (const Face& f : faces)
    for (int v : f.v) used[static_cast<size_t>(v)] = true;
  for (size_t i = 0; i < p.size(); ++i)
    if (used[i] && incident[i].size() >= 3) body.vertices.push_back(p[i]);

  std::map<std::pair<int, int>, bool> eset;
  for (const Face& f : faces)
    for (int e = 0; e < 3; ++e) {
      int a = f.v[static_cast<size_t>(e)];
      int b = f.v[static_cast<size_t>((e + 1) % 3)];
      eset[{std::min(a, b), std::max(a, b)}] = true;
    }
  for (const auto& [e, _] : eset) body.mesh_edges.push_back(e);

  return body;
}

Polytope convex_hull(const Points& pts, int dim) {
  require(dim == 2 || dim == 3, errc::bad_parameters, "convex_hull supports dim 2 or 3");
  if (dim == 3) return make_polytope3(pts);

  require(pts.size() >= 3, errc::degenerate_input, "need at least 3 points");
  Polygon2 poly = hull2(pts);
  require(poly.size() >= 3, errc::degenerate_input, "points are affinely dependent");
  Polytope body;
  body.dim = 2;
  body.full_dim = true;
  body.vertices = poly.verts;
  return body;
}

double Polytope::signed_gap(const Vec& p) const {
  require(!facet_planes.empty(), errc::bad_configuration, "body has no facet planes");
  double g = -std::numeric_limits<double>::infinity();
  for (const Hyperplane& h : facet_planes) g = std::max(g, h.signed_distance(p));
  return g;
}

double volume(const Polytope& body) {
  require(body.dim == 3 && body.full_dim, errc::bad_configuration, "volume needs a 3D body");
  Vec c = centroid(body.vertices);
  double v = 0.0;
  for (const auto& f : body.mesh_faces) {
    const Vec& a = body.mesh_pts[static_cast<size_t>(f[0])];
    const Vec& b = body.mesh_pts[static_cast<size_t>(f[1])];
    const Vec& d = body.mesh_pts[static_cast<size_t>(f[2])];
    v += dot(cross(b - a, d - a), a - c);
  }
  return v / 6.0;
}

}  // namespace mtomo
