#include "mirrortomo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "mirrortomo/errors.hpp"
#include "mirrortomo/rng.hpp"

namespace mtomo {

namespace {

int thread_budget() {
  if (const char* env = std::getenv("MT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(0..n-1); each index owns its output slot, so any schedule yields
// the same result.
template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
  size_t workers = std::min<size_t>(static_cast<size_t>(thread_budget()), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t t = 0; t < workers; ++t) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

MirrorTestResult mirror_test_impl(const Scenario& s, const LineSample& line, double tol_abs) {
  MirrorTestResult res;
  res.line = line;
  Hyperplane pi1 = plane_through(s.p1, line.m);
  Hyperplane pi2 = plane_through(s.p2, line.m);
  EmbeddedSection s1 = plane_section(s.k1, pi1);
  EmbeddedSection s2 = plane_section(s.k2, pi2);
  res.section_areas = {s1.empty() ? 0.0 : s1.poly.area(), s2.empty() ? 0.0 : s2.poly.area()};
  if (s1.empty() || s2.empty()) {
    res.status = LineStatus::SKIPPED_EMPTY;
    return res;
  }

  std::vector<Hyperplane> candidates = dihedral_bisectors(pi1, pi2, line.m);
  double best = std::numeric_limits<double>::infinity();
  size_t best_idx = 0;
  for (size_t i = 0; i < candidates.size(); ++i) {
    EmbeddedSection mirrored = reflect_section(candidates[i], s2);
    double d = hausdorff_sections(s1, mirrored);
    res.distances.push_back(d);
    if (d < best) {
      best = d;
      best_idx = i;
    }
  }
  res.best_mirror = candidates[best_idx];
  res.status = best <= tol_abs ? LineStatus::PASS : LineStatus::FAIL;
  return res;
}

}  // namespace

void validate_scenario(const Scenario& s) {
  require(s.k1.dim == s.k2.dim && s.k1.dim == s.h.dim() && s.k1.dim == s.p1.dim &&
              s.k1.dim == s.p2.dim,
          errc::bad_configuration, "scenario: bodies, plane and points disagree on dimension");
  require(s.k1.full_dim && s.k2.full_dim, errc::bad_configuration,
          "scenario: bodies must be full-dimensional");
  require(!s.k1.vertices.empty() && !s.k2.vertices.empty(), errc::bad_configuration,
          "scenario: bodies must be non-empty");
  require(std::abs(s.h.signed_distance(s.p1)) > 1e-9, errc::bad_configuration,
          "scenario: p1 must stay off H");
  require(std::abs(s.h.signed_distance(s.p2)) > 1e-9, errc::bad_configuration,
          "scenario: p2 must stay off H");
  require(distance(s.p1, s.p2) > 1e-12, errc::bad_configuration,
          "scenario: p1 and p2 must differ");
  require(s.mirror_tol > 0.0 && s.conclusion_tol > 0.0, errc::bad_configuration,
          "scenario: tolerances must be positive");
  require(s.sampling.n_angles >= 1 && s.sampling.n_offsets >= 1 && s.sampling.n_random >= 0,
          errc::bad_configuration, "scenario: bad sampling counts");
}

Footprint footprint_in(const Hyperplane& h, const Scenario& s) {
  Points shadow;
  shadow.reserve(s.k1.vertices.size() + s.k2.vertices.size() + 2);
  for (const Vec& v : s.k1.vertices) shadow.push_back(orthogonal_project_point(h, v));
  for (const Vec& v : s.k2.vertices) shadow.push_back(orthogonal_project_point(h, v));
  shadow.push_back(orthogonal_project_point(h, s.p1));
  shadow.push_back(orthogonal_project_point(h, s.p2));

  Footprint fp;
  fp.center = centroid(shadow);
  double r = 0.0;
  for (const Vec& q : shadow) r = std::max(r, distance(q, fp.center));
  fp.radius = std::max(r * 1.1, 1e-9);
  return fp;
}

std::vector<LineSample> sample_lines(const Hyperplane& h, const Footprint& footprint,
                                     const SamplingPlan& plan) {
  require(footprint.radius > 0.0, errc::bad_parameters,
          "sample_lines: footprint radius must be positive");
  require(plan.n_angles >= 1 && plan.n_offsets >= 1 && plan.n_random >= 0, errc::bad_parameters,
          "sample_lines: bad sampling counts");

  SectionFrame frame = section_frame(h, footprint.center);
  std::vector<LineSample> out;
  out.reserve(static_cast<size_t>(plan.n_angles) * plan.n_offsets + plan.n_random);
  char tag[48];
  for (int i = 0; i < plan.n_angles; ++i) {
    double th = std::numbers::pi * i / plan.n_angles;
    Vec u = std::cos(th) * frame.e1 + std::sin(th) * frame.e2;
    Vec perp = -std::sin(th) * frame.e1 + std::cos(th) * frame.e2;
    for (int j = 0; j < plan.n_offsets; ++j) {
      double off = ((j + 0.5) * 2.0 / plan.n_offsets - 1.0) * footprint.radius;
      std::snprintf(tag, sizeof tag, "grid:%d.%d", i, j);
      out.push_back({Line(frame.origin + off * perp, u), tag});
    }
  }
  Rng rng(plan.seed, "line_sampling");
  for (int k = 0; k < plan.n_random; ++k) {
    double th = rng.uniform(0.0, std::numbers::pi);
    double off = rng.uniform(-footprint.radius, footprint.radius);
    Vec u = std::cos(th) * frame.e1 + std::sin(th) * frame.e2;
    Vec perp = -std::sin(th) * frame.e1 + std::cos(th) * frame.e2;
    std::snprintf(tag, sizeof tag, "random:%d", k);
    out.push_back({Line(frame.origin + off * perp, u), tag});
  }
  return out;
}

std::vector<Hyperplane> candidate_mirrors(const Vec& p1, const Vec& p2, const Line& m) {
  Hyperplane pi1 = plane_through(p1, m);
  Hyperplane pi2 = plane_through(p2, m);
  return dihedral_bisectors(pi1, pi2, m);
}

const char* line_status_name(LineStatus s) {
  switch (s) {
    case LineStatus::PASS: return "PASS";
    case LineStatus::FAIL: return "FAIL";
    case LineStatus::SKIPPED_EMPTY: return "SKIPPED_EMPTY";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CONSISTENT: return "CONSISTENT";
    case Verdict::HYPOTHESIS_FAILS: return "HYPOTHESIS_FAILS";
    case Verdict::INCONSISTENT_WITNESS: return "INCONSISTENT_WITNESS";
  }
  return "?";
}

MirrorTestResult section_mirror_test(const Scenario& s, const LineSample& line) {
  double tol_abs = s.mirror_tol * std::max(s.k1.diameter(), s.k2.diameter());
  return mirror_test_impl(s, line, tol_abs);
}

TheoremReport verify_theorem(const Scenario& input) {
  validate_scenario(input);
  TheoremReport rep;

  Scenario s = input;
  Vec span = s.p2 - s.p1;
  if (std::abs(dot(s.h.normal, span)) <= 1e-9 * norm(span)) {
    // L(p1, p2) runs parallel to H: swap in the mirrored body and point so the
    // line meets H, which changes nothing the theorem asserts.
    s.k2 = reflect_polytope(s.h, s.k2);
    s.p2 = reflect_point(s.h, s.p2);
    rep.replaced_k2 = true;
    span = s.p2 - s.p1;
  }

  double denom = dot(s.h.normal, span);
  rep.sigma_exists = std::abs(denom) > 1e-12 * norm(span);
  if (rep.sigma_exists) {
    double t = -s.h.signed_distance(s.p1) / denom;
    rep.sigma = s.p1 + t * span;
    rep.dist_p1_sigma = distance(s.p1, rep.sigma);
    rep.dist_p2_sigma = distance(s.p2, rep.sigma);
  }

  double scale = std::max(s.k1.diameter(), s.k2.diameter());
  rep.mirror_tol_abs = s.mirror_tol * scale;
  rep.conclusion_tol_abs = s.conclusion_tol * scale;

  std::vector<LineSample> lines = sample_lines(s.h, footprint_in(s.h, s), s.sampling);
  rep.lines.resize(lines.size());
  parallel_for(lines.size(),
               [&](size_t i) { rep.lines[i] = mirror_test_impl(s, lines[i], rep.mirror_tol_abs); });

  for (const MirrorTestResult& r : rep.lines) {
    switch (r.status) {
      case LineStatus::PASS: ++rep.n_pass; break;
      case LineStatus::FAIL: ++rep.n_fail; break;
      case LineStatus::SKIPPED_EMPTY: ++rep.n_skipped; break;
    }
  }
  int tested = rep.n_pass + rep.n_fail;
  rep.hypothesis_pass_rate = tested == 0 ? 0.0 : static_cast<double>(rep.n_pass) / tested;

  Points reflected;
  reflected.reserve(s.k2.vertices.size());
  for (const Vec& v : s.k2.vertices) reflected.push_back(reflect_point(s.h, v));
  rep.conclusion_distance = hausdorff_points(reflected, s.k1.vertices);
  rep.point_check = distance(reflect_point(s.h, s.p2), s.p1);

  if (rep.n_fail > 0) {
    rep.verdict = Verdict::HYPOTHESIS_FAILS;
  } else if (rep.conclusion_distance <= rep.conclusion_tol_abs) {
    rep.verdict = Verdict::CONSISTENT;
  } else {
    rep.verdict = Verdict::INCONSISTENT_WITNESS;
  }
  return rep;
}

ProjectionSymmetryReport projection_symmetry_check(const Polytope& k1, const Polytope& k2,
                                                   const Hyperplane& h, int n_dirs, double tol) {
  require(k1.dim == 3 && k2.dim == 3 && h.dim() == 3, errc::bad_configuration,
          "projection_symmetry_check: expects 3D bodies");
  require(n_dirs > 0, errc::bad_parameters, "projection_symmetry_check: n_dirs must be positive");

  SectionFrame hframe = section_frame(h, Vec::zero(3));
  ProjectionSymmetryReport rep;
  rep.distances.resize(static_cast<size_t>(n_dirs));

  for (int i = 0; i < n_dirs; ++i) {
    double th = std::numbers::pi * i / n_dirs;
    Vec u = std::cos(th) * hframe.e1 + std::sin(th) * hframe.e2;
    Hyperplane gamma = Hyperplane::from_unit(u, 0.0);
    SectionFrame gframe = section_frame(gamma, Vec::zero(3));

    Points uv1, uv2;
    uv1.reserve(k1.vertices.size());
    uv2.reserve(k2.vertices.size());
    for (const Vec& v : k1.vertices) uv1.push_back(gframe.project(v));
    for (const Vec& v : k2.vertices) uv2.push_back(gframe.project(v));
    Polygon2 img1 = hull2(uv1);

    // Trace of H inside gamma, as a 2D line a*x + b*y = c with unit (a, b).
    double a = dot(h.normal, gframe.e1);
    double b = dot(h.normal, gframe.e2);
    double c = h.offset - dot(h.normal, gframe.origin);
    for (Vec& p : uv2) {
      double sd = a * p[0] + b * p[1] - c;
      p = Vec(p[0] - 2.0 * sd * a, p[1] - 2.0 * sd * b);
    }
    Polygon2 img2 = hull2(uv2);

    double d;
    if (img1.size() >= 3 && img2.size() >= 3) {
      d = hausdorff2(img1, img2);
    } else {
      d = hausdorff_points(img1.verts, img2.verts);
    }
    rep.distances[static_cast<size_t>(i)] = d;
    if (i == 0 || d > rep.worst_distance) {
      rep.worst_distance = d;
      rep.worst_direction = u;
    }
  }
  rep.passed = rep.worst_distance <= tol;

  Points reflected;
  reflected.reserve(k2.vertices.size());
  for (const Vec& v : k2.vertices) reflected.push_back(reflect_point(h, v));
  rep.body_distance = hausdorff_points(reflected, k1.vertices);
  rep.co_occurrence_ok = rep.passed == (rep.body_distance <= tol);
  return rep;
}

Scenario projection_reduction(const Scenario& s4, const Hyperplane& gamma) {
  require(s4.k1.dim == 4 && s4.k2.dim == 4 && gamma.dim() == 4, errc::bad_configuration,
          "projection_reduction: expects a 4D scenario and target");
  require(std::abs(dot(gamma.normal, s4.h.normal)) <= 1e-10, errc::not_orthogonal,
          "projection_reduction: target must be orthogonal to H");

  AffineFrame frame = hyperplane_frame(gamma, Vec::zero(4));
  auto drop = [&](const Vec& v) {
    Vec c = frame.coords(v);
    return Vec(c[0], c[1], c[2]);
  };

  Scenario out;
  Points v1, v2;
  v1.reserve(s4.k1.vertices.size());
  v2.reserve(s4.k2.vertices.size());
  for (const Vec& v : s4.k1.vertices) v1.push_back(drop(v));
  for (const Vec& v : s4.k2.vertices) v2.push_back(drop(v));
  out.k1 = convex_hull(v1, 3);
  out.k2 = convex_hull(v2, 3);

  Vec hn(dot(s4.h.normal, frame.basis[0]), dot(s4.h.normal, frame.basis[1]),
         dot(s4.h.normal, frame.basis[2]));
  out.h = Hyperplane(hn, s4.h.offset - dot(s4.h.normal, frame.origin));
  out.p1 = drop(s4.p1);
  out.p2 = drop(s4.p2);
  out.mirror_tol = s4.mirror_tol;
  out.conclusion_tol = s4.conclusion_tol;
  out.sampling = s4.sampling;
  return out;
}

RevolutionVerdict revolution_axis_test(const Polytope& k, const Line& axis, int n_planes,
                                       double tol) {
  require(k.dim == 3 && k.full_dim, errc::bad_configuration,
          "revolution_axis_test: expects a full-dimensional 3D body");
  require(n_planes > 0, errc::bad_parameters, "revolution_axis_test: n_planes must be positive");

  double tmin = std::numeric_limits<double>::infinity();
  double tmax = -tmin;
  for (const Vec& v : k.vertices) {
    double t = dot(v - axis.base, axis.dir);
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }

  RevolutionVerdict verdict;
  bool all_round = true;
  for (int i = 0; i < n_planes; ++i) {
    double t = tmin + (i + 0.5) * (tmax - tmin) / n_planes;
    Hyperplane plane = Hyperplane::from_unit(axis.dir, dot(axis.dir, axis.at(t)));
    EmbeddedSection sec = plane_section(k, plane);
    ++verdict.n_planes_checked;
    if (sec.poly.size() < 3) {
      all_round = false;
      continue;
    }
    CircleFit fit;
    try {
      fit = circle_fit(sec.poly, tol);
    } catch (const Error&) {
      all_round = false;
      continue;
    }
    Vec center3 = sec.frame.embed(fit.center);
    Vec rel = center3 - axis.base;
    Vec off_axis = rel - dot(rel, axis.dir) * axis.dir;
    verdict.max_radial_deviation = std::max(verdict.max_radial_deviation,
                                            fit.max_radial_deviation);
    verdict.max_center_offset = std::max(verdict.max_center_offset, norm(off_axis));
  }
  verdict.passed = all_round && verdict.max_radial_deviation <= tol &&
                   verdict.max_center_offset <= tol;
  return verdict;
}

ShadowSectionVerdict shadow_section_test(const Polytope& k, const Hyperplane& gamma, double tol) {
  require(k.dim == 3 && k.full_dim, errc::bad_configuration,
          "shadow_section_test: expects a full-dimensional 3D body");

  ShadowSectionVerdict verdict;
  EmbeddedSection sec = plane_section(k, gamma);
  Points shadow = shadow_boundary(k, gamma.normal);
  if (sec.empty() || shadow.empty()) return verdict;

  Points sec3 = sec.verts3();
  for (const Vec& p : sec3) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& q : shadow) best = std::min(best, distance(p, q));
    verdict.section_to_shadow = std::max(verdict.section_to_shadow, best);
  }
  for (const Vec& q : shadow) {
    Vec uv = sec.frame.project(q);
    double in_plane = point_polygon_distance(uv, sec.poly);
    double off_plane = distance(q, sec.frame.embed(uv));
    verdict.shadow_to_section =
        std::max(verdict.shadow_to_section, std::hypot(in_plane, off_plane));
  }
  verdict.passed = verdict.section_to_shadow <= tol && verdict.shadow_to_section <= tol;
  return verdict;
}

}  // namespace mtomo
