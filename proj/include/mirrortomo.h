#ifndef MIRRORTOMO_H
#define MIRRORTOMO_H

/* C interface of the mirrortomo shared library. All functions are
 * thread-compatible: handles are immutable after creation and may be shared
 * across threads; error messages are thread-local.
 *
 * Every entry point returns an mt_status. On MT_OK the output parameters are
 * valid; otherwise mt_last_error() describes the failure. Run functions write
 * their artifact files into out_dir (created if missing) and report the
 * command exit code (0 consistent/pass, 2 hypothesis failure, 3 inconsistent
 * witness) through *exit_code.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MIRRORTOMO_VERSION "1.0.0"

typedef enum mt_status {
  MT_OK = 0,
  MT_ERR_DEGENERATE_SPAN = 1,
  MT_ERR_LINE_NOT_ON_PLANE = 2,
  MT_ERR_DEGENERATE_INPUT = 3,
  MT_ERR_UNBOUNDED_PROJECTION = 4,
  MT_ERR_EMPTY_OPERAND = 5,
  MT_ERR_POINT_OUTSIDE_BODY = 6,
  MT_ERR_DEGENERATE_CHORD = 7,
  MT_ERR_CONSTRUCTION_BREAKDOWN = 8,
  MT_ERR_POINT_OUTSIDE_CIRCLE = 9,
  MT_ERR_NOT_ORTHOGONAL = 10,
  MT_ERR_BAD_PARAMETERS = 11,
  MT_ERR_BAD_CONFIGURATION = 12,
  MT_ERR_PARSE = 13,
  MT_ERR_INTERNAL = 14
} mt_status;

const char* mt_version(void);
const char* mt_status_name(mt_status s);

/* Message of the most recent failing call on this thread ("" after success).
 * The pointer stays valid until the next library call on the same thread. */
const char* mt_last_error(void);

/* ---- scenario handles --------------------------------------------------- */

typedef struct mt_scenario mt_scenario;

mt_status mt_scenario_load_file(const char* path, mt_scenario** out);
mt_status mt_scenario_load_text(const char* json_text, mt_scenario** out);
void mt_scenario_free(mt_scenario* s);

/* Ambient dimension (3 or 4); 0 for a null handle. */
int mt_scenario_dim(const mt_scenario* s);

/* ---- commands ----------------------------------------------------------- */

/* 3D scenario: writes report.json and lines.csv. */
mt_status mt_run_verify(const mt_scenario* s, const char* out_dir, int* exit_code);

/* 4D scenario: reduces along the hyperplane with the given normal (length 4)
 * and offset, then verifies. Writes report.json, lines.csv, projections.csv. */
mt_status mt_run_project(const mt_scenario* s, const double gamma_normal[4],
                         double gamma_offset, const char* out_dir, int* exit_code);

typedef struct mt_sphere_lemma_params {
  double r;
  const double* x0_grid;
  size_t n_x0;
  const double* k_grid;
  size_t n_k;
} mt_sphere_lemma_params;

/* params == NULL runs the default sweep (r = 1, x0 in {0.25, 0.5, 0.75},
 * k in {0.1, 0.5, 2}). Writes sphere_lemmas.json. */
mt_status mt_run_sphere_lemmas(const mt_sphere_lemma_params* params, const char* out_dir,
                               int* exit_code);

/* ---- polygon handles ---------------------------------------------------- */

typedef struct mt_polygon mt_polygon;

mt_status mt_polygon_load_file(const char* path, mt_polygon** out);
mt_status mt_polygon_load_text(const char* json_text, mt_polygon** out);
void mt_polygon_free(mt_polygon* p);

typedef struct mt_circle_char_params {
  double ax, ay; /* first base point */
  double bx, by; /* second base point */
  int n_dirs;    /* <= 0 picks 128 */
  int n_steps;   /* <= 0 picks 50 */
  double start_angle_deg;
} mt_circle_char_params;

/* Writes report.json, circle_char.csv, rectangle_orbit.csv. */
mt_status mt_run_circle_char(const mt_polygon* poly, const mt_circle_char_params* params,
                             const char* out_dir, int* exit_code);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MIRRORTOMO_H */
