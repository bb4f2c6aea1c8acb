#include "mirrortomo.h"

#include <exception>
#include <string>

#include "mirrortomo/errors.hpp"
#include "mirrortomo/runner.hpp"

struct mt_scenario {
  mtomo::ScenarioDoc doc;
};

struct mt_polygon {
  mtomo::PolygonDoc doc;
};

namespace {

thread_local std::string g_last_error;

mt_status status_of(mtomo::errc c) {
  using mtomo::errc;
  switch (c) {
    case errc::degenerate_span: return MT_ERR_DEGENERATE_SPAN;
    case errc::line_not_on_plane: return MT_ERR_LINE_NOT_ON_PLANE;
    case errc::degenerate_input: return MT_ERR_DEGENERATE_INPUT;
    case errc::unbounded_projection: return MT_ERR_UNBOUNDED_PROJECTION;
    case errc::empty_operand: return MT_ERR_EMPTY_OPERAND;
    case errc::point_outside_body: return MT_ERR_POINT_OUTSIDE_BODY;
    case errc::degenerate_chord: return MT_ERR_DEGENERATE_CHORD;
    case errc::construction_breakdown: return MT_ERR_CONSTRUCTION_BREAKDOWN;
    case errc::point_outside_circle: return MT_ERR_POINT_OUTSIDE_CIRCLE;
    case errc::not_orthogonal: return MT_ERR_NOT_ORTHOGONAL;
    case errc::bad_parameters: return MT_ERR_BAD_PARAMETERS;
    case errc::bad_configuration: return MT_ERR_BAD_CONFIGURATION;
    case errc::parse_error: return MT_ERR_PARSE;
  }
  return MT_ERR_INTERNAL;
}

mt_status arg_error(const char* msg) {
  g_last_error = msg;
  return MT_ERR_BAD_PARAMETERS;
}

template <typename Fn>
mt_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return MT_OK;
  } catch (const mtomo::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MT_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* mt_version(void) { return MIRRORTOMO_VERSION; }

const char* mt_status_name(mt_status s) {
  switch (s) {
    case MT_OK: return "OK";
    case MT_ERR_DEGENERATE_SPAN: return "DegenerateSpan";
    case MT_ERR_LINE_NOT_ON_PLANE: return "LineNotOnPlane";
    case MT_ERR_DEGENERATE_INPUT: return "DegenerateInput";
    case MT_ERR_UNBOUNDED_PROJECTION: return "UnboundedProjection";
    case MT_ERR_EMPTY_OPERAND: return "EmptyOperand";
    case MT_ERR_POINT_OUTSIDE_BODY: return "PointOutsideBody";
    case MT_ERR_DEGENERATE_CHORD: return "DegenerateChord";
    case MT_ERR_CONSTRUCTION_BREAKDOWN: return "ConstructionBreakdown";
    case MT_ERR_POINT_OUTSIDE_CIRCLE: return "PointOutsideCircle";
    case MT_ERR_NOT_ORTHOGONAL: return "NotOrthogonal";
    case MT_ERR_BAD_PARAMETERS: return "BadParameters";
    case MT_ERR_BAD_CONFIGURATION: return "BadConfiguration";
    case MT_ERR_PARSE: return "ParseError";
    case MT_ERR_INTERNAL: return "InternalError";
  }
  return "InternalError";
}

const char* mt_last_error(void) { return g_last_error.c_str(); }

mt_status mt_scenario_load_file(const char* path, mt_scenario** out) {
  if (!path || !out) return arg_error("mt_scenario_load_file: null argument");
  *out = nullptr;
  return guarded([&] { *out = new mt_scenario{mtomo::load_scenario_file(path)}; });
}

mt_status mt_scenario_load_text(const char* json_text, mt_scenario** out) {
  if (!json_text || !out) return arg_error("mt_scenario_load_text: null argument");
  *out = nullptr;
  return guarded([&] { *out = new mt_scenario{mtomo::parse_scenario_text(json_text)}; });
}

void mt_scenario_free(mt_scenario* s) { delete s; }

int mt_scenario_dim(const mt_scenario* s) { return s ? s->doc.scenario.k1.dim : 0; }

mt_status mt_run_verify(const mt_scenario* s, const char* out_dir, int* exit_code) {
  if (!s || !out_dir || !exit_code) return arg_error("mt_run_verify: null argument");
  return guarded([&] { *exit_code = mtomo::run_verify(s->doc, out_dir).exit_code; });
}

mt_status mt_run_project(const mt_scenario* s, const double gamma_normal[4], double gamma_offset,
                         const char* out_dir, int* exit_code) {
  if (!s || !gamma_normal || !out_dir || !exit_code)
    return arg_error("mt_run_project: null argument");
  return guarded([&] {
    mtomo::Vec n(gamma_normal[0], gamma_normal[1], gamma_normal[2], gamma_normal[3]);
    *exit_code = mtomo::run_project(s->doc, n, gamma_offset, out_dir).exit_code;
  });
}

mt_status mt_run_sphere_lemmas(const mt_sphere_lemma_params* params, const char* out_dir,
                               int* exit_code) {
  if (!out_dir || !exit_code) return arg_error("mt_run_sphere_lemmas: null argument");
  return guarded([&] {
    mtomo::SphereLemmaParams p;
    if (params) {
      p.r = params->r;
      if (params->x0_grid && params->n_x0 > 0)
        p.x0_grid.assign(params->x0_grid, params->x0_grid + params->n_x0);
      if (params->k_grid && params->n_k > 0)
        p.k_grid.assign(params->k_grid, params->k_grid + params->n_k);
    }
    *exit_code = mtomo::run_sphere_lemmas(p, out_dir).exit_code;
  });
}

mt_status mt_polygon_load_file(const char* path, mt_polygon** out) {
  if (!path || !out) return arg_error("mt_polygon_load_file: null argument");
  *out = nullptr;
  return guarded([&] { *out = new mt_polygon{mtomo::load_polygon_file(path)}; });
}

mt_status mt_polygon_load_text(const char* json_text, mt_polygon** out) {
  if (!json_text || !out) return arg_error("mt_polygon_load_text: null argument");
  *out = nullptr;
  return guarded([&] { *out = new mt_polygon{mtomo::parse_polygon_text(json_text)}; });
}

void mt_polygon_free(mt_polygon* p) { delete p; }

mt_status mt_run_circle_char(const mt_polygon* poly, const mt_circle_char_params* params,
                             const char* out_dir, int* exit_code) {
  if (!poly || !params || !out_dir || !exit_code)
    return arg_error("mt_run_circle_char: null argument");
  return guarded([&] {
    mtomo::CircleCharParams p;
    p.a = mtomo::Vec(params->ax, params->ay);
    p.b = mtomo::Vec(params->bx, params->by);
    if (params->n_dirs > 0) p.n_dirs = params->n_dirs;
    if (params->n_steps > 0) p.n_steps = params->n_steps;
    p.start_angle_deg = params->start_angle_deg;
    *exit_code = mtomo::run_circle_char(poly->doc, p, out_dir).exit_code;
  });
}

}  // extern "C"
