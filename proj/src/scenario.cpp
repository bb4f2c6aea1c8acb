#include "mirrortomo/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "mirrortomo/errors.hpp"
#include "mirrortomo/rng.hpp"

namespace mtomo {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  fail(errc::parse_error, "field '" + path + "': " + why);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const json* find(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& member(const json& obj, const std::string& path, const char* key) {
  const json* j = find(obj, path, key);
  if (!j) bad(join(path, key), "missing");
  return *j;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) bad(path, "must be finite");
  return v;
}

double number_or(const json& obj, const std::string& path, const char* key, double dflt) {
  const json* j = find(obj, path, key);
  return j ? as_number(*j, join(path, key)) : dflt;
}

int as_count(const json& j, const std::string& path, int lo) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  int64_t v = j.get<int64_t>();
  if (v < lo) bad(path, "must be at least " + std::to_string(lo));
  return static_cast<int>(v);
}

int count_or(const json& obj, const std::string& path, const char* key, int dflt, int lo) {
  const json* j = find(obj, path, key);
  return j ? as_count(*j, join(path, key), lo) : dflt;
}

Vec as_vec(const json& j, const std::string& path, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    bad(path, "expected an array of " + std::to_string(dim) + " numbers");
  Vec v = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) v[i] = as_number(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

Vec vec_or(const json& obj, const std::string& path, const char* key, int dim, const Vec& dflt) {
  const json* j = find(obj, path, key);
  return j ? as_vec(*j, join(path, key), dim) : dflt;
}

json parse_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, std::string(what) + ": not valid JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_schema_version(const json& root, const std::string& what) {
  const json& sv = member(root, "", "schema_version");
  if (!sv.is_number_integer() || sv.get<int64_t>() != 1)
    bad("schema_version", "unsupported value in " + what + " (expected 1)");
}

Polytope make_body(const json& spec, const std::string& path, int dim, const Hyperplane& h,
                   const Polytope* k1, uint64_t file_seed) {
  if (!spec.is_object()) bad(path, "expected an object");
  bool has_gen = spec.contains("generator");
  bool has_verts = spec.contains("vertices");
  if (has_gen == has_verts) bad(path, "give exactly one of 'generator' or 'vertices'");

  if (has_verts) {
    const json& arr = spec["vertices"];
    std::string vpath = path + ".vertices";
    if (!arr.is_array() || static_cast<int>(arr.size()) < dim + 1)
      bad(vpath, "expected an array of at least " + std::to_string(dim + 1) + " points");
    Points pts;
    for (size_t i = 0; i < arr.size(); ++i)
      pts.push_back(as_vec(arr[i], vpath + "[" + std::to_string(i) + "]", dim));
    return convex_hull(pts, dim);
  }

  const json& gen = spec["generator"];
  std::string gpath = path + ".generator";
  if (!gen.is_string()) bad(gpath, "expected a string");
  std::string name = gen.get<std::string>();
  json params = json::object();
  if (const json* p = find(spec, path, "params")) {
    if (!p->is_object()) bad(path + ".params", "expected an object");
    params = *p;
  }
  std::string ppath = path + ".params";
  uint64_t seed = substream_seed(file_seed, "body:" + path);

  auto require_3d = [&] {
    if (dim != 3) bad(gpath, "generator '" + name + "' is 3D only");
  };

  if (name == "ball") {
    require_3d();
    double r = as_number(member(params, ppath, "radius"), ppath + ".radius");
    if (r <= 0.0) bad(ppath + ".radius", "must be positive");
    int n = as_count(member(params, ppath, "n"), ppath + ".n", 4);
    return make_ball(vec_or(params, ppath, "center", 3, Vec::zero(3)), r, n, seed);
  }
  if (name == "ellipsoid") {
    require_3d();
    double a = as_number(member(params, ppath, "a"), ppath + ".a");
    double b = as_number(member(params, ppath, "b"), ppath + ".b");
    double c = as_number(member(params, ppath, "c"), ppath + ".c");
    if (a <= 0.0 || b <= 0.0 || c <= 0.0) bad(ppath, "semi-axes must be positive");
    int n = as_count(member(params, ppath, "n"), ppath + ".n", 4);
    return make_ellipsoid(a, b, c, n, vec_or(params, ppath, "center", 3, Vec::zero(3)), seed);
  }
  if (name == "random") {
    int n = as_count(member(params, ppath, "n"), ppath + ".n", dim + 1);
    std::string shape = "on_sphere";
    if (const json* s = find(params, ppath, "shape")) {
      if (!s->is_string()) bad(ppath + ".shape", "expected a string");
      shape = s->get<std::string>();
    }
    ShapeClass cls;
    if (shape == "on_sphere")
      cls = ShapeClass::on_sphere;
    else if (shape == "in_ball")
      cls = ShapeClass::in_ball;
    else if (shape == "in_cube")
      cls = ShapeClass::in_cube;
    else
      bad(ppath + ".shape", "unknown shape '" + shape + "'");
    double scale = number_or(params, ppath, "scale", 1.0);
    if (scale <= 0.0) bad(ppath + ".scale", "must be positive");
    return make_random_polytope(seed, n, cls, dim, scale, vec_or(params, ppath, "center", dim, Vec::zero(dim)));
  }
  if (name == "revolution") {
    require_3d();
    const json& prof = member(params, ppath, "profile");
    std::string fpath = ppath + ".profile";
    if (!prof.is_array() || prof.size() < 2) bad(fpath, "expected an array of [radius, height] pairs");
    std::vector<std::pair<double, double>> profile;
    for (size_t i = 0; i < prof.size(); ++i) {
      std::string epath = fpath + "[" + std::to_string(i) + "]";
      if (!prof[i].is_array() || prof[i].size() != 2) bad(epath, "expected [radius, height]");
      profile.push_back({as_number(prof[i][0], epath), as_number(prof[i][1], epath)});
    }
    int n = as_count(member(params, ppath, "n"), ppath + ".n", 3);
    return make_revolution_body(profile, n);
  }
  if (name == "mirror") {
    if (!k1) bad(gpath, "'mirror' may only define k2");
    if (const json* of = find(params, ppath, "of")) {
      if (!of->is_string() || of->get<std::string>() != "k1") bad(ppath + ".of", "must be \"k1\"");
    }
    return reflect_polytope(h, *k1);
  }
  if (name == "rotated") {
    require_3d();
    if (!k1) bad(gpath, "'rotated' may only define k2");
    if (const json* of = find(params, ppath, "of")) {
      if (!of->is_string() || of->get<std::string>() != "k1") bad(ppath + ".of", "must be \"k1\"");
    }
    Vec axis = as_vec(member(params, ppath, "axis"), ppath + ".axis", 3);
    double degrees = as_number(member(params, ppath, "degrees"), ppath + ".degrees");
    return rotate_polytope(*k1, axis, degrees, vec_or(params, ppath, "pivot", 3, Vec::zero(3)));
  }
  bad(gpath, "unknown generator '" + name + "'");
}

}  // namespace

ScenarioDoc parse_scenario_text(const std::string& json_text) {
  json root = parse_text(json_text, "scenario");
  check_schema_version(root, "scenario");

  Scenario s;
  if (const json* seed = find(root, "", "seed")) {
    if (!seed->is_number_unsigned() && !seed->is_number_integer()) bad("seed", "expected an integer");
    s.sampling.seed = seed->get<uint64_t>();
  }

  const json& jp1 = member(root, "", "p1");
  if (!jp1.is_array() || (jp1.size() != 3 && jp1.size() != 4))
    bad("p1", "expected an array of 3 or 4 numbers");
  int dim = static_cast<int>(jp1.size());
  s.p1 = as_vec(jp1, "p1", dim);
  s.p2 = as_vec(member(root, "", "p2"), "p2", dim);

  const json& jh = member(root, "", "h");
  Vec n = as_vec(member(jh, "h", "normal"), "h.normal", dim);
  if (norm(n) < 1e-12) bad("h.normal", "must be nonzero");
  s.h = Hyperplane(n, as_number(member(jh, "h", "offset"), "h.offset"));

  uint64_t file_seed = s.sampling.seed;
  s.k1 = make_body(member(root, "", "k1"), "k1", dim, s.h, nullptr, file_seed);
  s.k2 = make_body(member(root, "", "k2"), "k2", dim, s.h, &s.k1, file_seed);

  if (const json* tol = find(root, "", "tolerances")) {
    s.mirror_tol = number_or(*tol, "tolerances", "mirror_tol", s.mirror_tol);
    s.conclusion_tol = number_or(*tol, "tolerances", "conclusion_tol", s.conclusion_tol);
    if (s.mirror_tol <= 0.0) bad("tolerances.mirror_tol", "must be positive");
    if (s.conclusion_tol <= 0.0) bad("tolerances.conclusion_tol", "must be positive");
  }
  if (const json* samp = find(root, "", "sampling")) {
    s.sampling.n_angles = count_or(*samp, "sampling", "n_angles", s.sampling.n_angles, 1);
    s.sampling.n_offsets = count_or(*samp, "sampling", "n_offsets", s.sampling.n_offsets, 1);
    s.sampling.n_random = count_or(*samp, "sampling", "n_random", s.sampling.n_random, 0);
  }

  try {
    validate_scenario(s);
  } catch (const Error& e) {
    fail(errc::parse_error, std::string("scenario invalid: ") + e.what());
  }
  return ScenarioDoc{std::move(s), root.dump()};
}

ScenarioDoc load_scenario_file(const std::string& path) {
  return parse_scenario_text(read_file(path));
}

PolygonDoc parse_polygon_text(const std::string& json_text) {
  json root = parse_text(json_text, "polygon");
  check_schema_version(root, "polygon");

  bool has_gen = root.contains("generator");
  bool has_verts = root.contains("vertices");
  if (has_gen == has_verts) bad("polygon", "give exactly one of 'generator' or 'vertices'");

  Points pts;
  if (has_verts) {
    const json& arr = root["vertices"];
    if (!arr.is_array() || arr.size() < 3) bad("vertices", "expected an array of at least 3 points");
    for (size_t i = 0; i < arr.size(); ++i)
      pts.push_back(as_vec(arr[i], "vertices[" + std::to_string(i) + "]", 2));
  } else {
    const json& gen = root["generator"];
    if (!gen.is_string()) bad("generator", "expected a string");
    std::string name = gen.get<std::string>();
    json params = json::object();
    if (const json* p = find(root, "", "params")) {
      if (!p->is_object()) bad("params", "expected an object");
      params = *p;
    }
    int ngon = as_count(member(params, "params", "n"), "params.n", 3);
    Vec center = vec_or(params, "params", "center", 2, Vec::zero(2));
    double sa = 1.0, sb = 1.0;
    if (name == "regular") {
      sa = sb = as_number(member(params, "params", "radius"), "params.radius");
      if (sa <= 0.0) bad("params.radius", "must be positive");
    } else if (name == "ellipse") {
      sa = as_number(member(params, "params", "a"), "params.a");
      sb = as_number(member(params, "params", "b"), "params.b");
      if (sa <= 0.0 || sb <= 0.0) bad("params", "semi-axes must be positive");
    } else {
      bad("generator", "unknown generator '" + name + "'");
    }
    for (int i = 0; i < ngon; ++i) {
      double t = 2.0 * 3.14159265358979323846 * i / ngon;
      pts.push_back(center + Vec(sa * std::cos(t), sb * std::sin(t)));
    }
  }

  Polygon2 poly = hull2(pts);
  if (poly.verts.size() < 3) bad("polygon", "points are collinear");
  return PolygonDoc{std::move(poly), root.dump()};
}

PolygonDoc load_polygon_file(const std::string& path) {
  return parse_polygon_text(read_file(path));
}

}  // namespace mtomo
