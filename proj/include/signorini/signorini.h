#ifndef SIGNORINI_H
#define SIGNORINI_H

#include <stddef.h>

#if defined(SIGNORINI_BUILDING_LIBRARY)
#define SG_API __attribute__((visibility("default")))
#else
#define SG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. The first four double as CLI exit codes. */
typedef enum sg_status {
  SG_OK = 0,
  SG_CHECK_FAILED = 1,
  SG_CONFIG_ERROR = 2,
  SG_NOT_CONVERGED = 3,
  SG_INVALID_ARGUMENT = 4,
  SG_INTERNAL_ERROR = 5
} sg_status;

typedef struct sg_grid sg_grid;
typedef struct sg_field sg_field;
typedef struct sg_config sg_config;
typedef struct sg_report sg_report;

typedef struct sg_solver_params {
  double omega;   /* 0 selects 1.8 */
  double tol;     /* 0 selects 1e-9 */
  long max_iter;  /* 0 selects 500 N */
} sg_solver_params;

SG_API const char* sg_version(void);
/* Message of the last failing call on this thread; never NULL. */
SG_API const char* sg_last_error(void);

SG_API sg_status sg_grid_create(int resolution, sg_grid** out);
SG_API void sg_grid_destroy(sg_grid* grid);
SG_API int sg_grid_resolution(const sg_grid* grid);
SG_API double sg_grid_spacing(const sg_grid* grid);
SG_API size_t sg_grid_interior_count(const sg_grid* grid);
SG_API size_t sg_grid_dirichlet_count(const sg_grid* grid);

/* Obstacle problem on the unit disk. region: "halfline", "fullline",
   "cone:<half_angle>", "cantor:<level>"; boundary: a selector such as
   "halpha:0.5" or "cos-shift:0.3"; constant obstacle on the region.
   params may be NULL. A solve that stops at the iteration limit still
   returns its field together with SG_NOT_CONVERGED. */
SG_API sg_status sg_solve_obstacle(const sg_grid* grid, const char* region, const char* boundary, double obstacle,
                                   const sg_solver_params* params, sg_field** out);
SG_API void sg_field_destroy(sg_field* field);
SG_API sg_status sg_field_value(const sg_field* field, int i, int j, double* out);
SG_API sg_status sg_field_solve_info(const sg_field* field, long* iterations, int* converged,
                                     double* complementarity_defect);
SG_API sg_status sg_field_contact_count(const sg_field* field, size_t* out);
/* Almgren frequency at radius r about the origin; SG_INVALID_ARGUMENT when undefined. */
SG_API sg_status sg_field_frequency(const sg_field* field, double r, double* out);
SG_API sg_status sg_field_acf(const sg_field* field, double r, double* out);
/* Hölder exponent at the origin over [r_min, r_max]. */
SG_API sg_status sg_field_holder(const sg_field* field, double r_min, double r_max, double* out);

/* cap0(B_inner(0); B_outer(0)) on a sub-grid of `resolution` nodes per axis. */
SG_API sg_status sg_capacity_disk(double inner, double outer, int resolution, double* out);

SG_API sg_status sg_config_create(sg_config** out);
SG_API sg_status sg_config_load(const char* path, sg_config** out);
SG_API sg_status sg_config_set(sg_config* config, const char* key, const char* value);
SG_API void sg_config_destroy(sg_config* config);

/* command: "solve", "capacity", "frequency", "blowup" or "experiment".
   Returns SG_OK once a report exists; the run outcome is its exit code.
   A NULL out_dir selects the config's out key. */
SG_API sg_status sg_run(const char* command, const sg_config* config, const char* out_dir, int quiet,
                        sg_report** out);
SG_API sg_status sg_run_batch(const char* batch_file, const sg_config* overrides, const char* out_dir, int quiet,
                              sg_report** out);
SG_API const char* sg_report_json(const sg_report* report);
SG_API int sg_report_exit_code(const sg_report* report);
SG_API size_t sg_report_check_count(const sg_report* report);
/* name/pass of check i; the name stays valid while the report lives. */
SG_API sg_status sg_report_check(const sg_report* report, size_t i, const char** name, int* pass);
SG_API void sg_report_destroy(sg_report* report);

#ifdef __cplusplus
}
#endif

#endif
