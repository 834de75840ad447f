/* relflow — exact solutions of special-relativistic perfect-fluid
 * hydrodynamics generated from scalar-field potentials, with a
 * finite-difference conservation-law verifier and a small finite-volume
 * solver.
 *
 * C API of the shared library. All functions are thread-safe; handles are
 * immutable after creation and may be shared across threads. Strings
 * returned through char** or char* are heap-allocated and must be released
 * with rf_string_free(). On failure, functions return a nonzero rf_status
 * and leave a human-readable detail in rf_last_error() (thread-local).
 */
#ifndef RELFLOW_H
#define RELFLOW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
  RF_OK = 0,
  RF_ERR_INVALID_ARG = 1,   /* bad parameter value or malformed input */
  RF_ERR_UNKNOWN_SOLUTION = 2,
  RF_ERR_DOMAIN = 3,        /* evaluation outside mathematical domain */
  RF_ERR_NUMERIC = 4,       /* solver blow-up, unrecoverable state, ... */
  RF_ERR_NOT_SUPPORTED = 5
} rf_status;

/* Flow classification at a point. */
typedef enum rf_flow_class {
  RF_CLASS_PHYSICAL = 0,
  RF_CLASS_TACHYONIC = 1,
  RF_CLASS_INVALID = 2
} rf_flow_class;

/* Library version, e.g. "0.1.0". Static storage; do not free. */
const char* rf_version(void);

/* Static description of a status code. Do not free. */
const char* rf_status_message(rf_status status);

/* Detail message of the most recent failure on this thread ("" if none).
 * Valid until the next failing call on the same thread. Do not free. */
const char* rf_last_error(void);

/* Release a string allocated by this library. NULL is ignored. */
void rf_string_free(char* s);

/* JSON catalog of all solutions: id, parameter schema with defaults,
 * equation-of-state, symmetry, closed-form descriptor. */
char* rf_catalog_json(void);

/* ------------------------------------------------------------------ */
/* Solutions                                                           */

typedef struct rf_solution rf_solution; /* opaque, immutable */

/* Create a catalog solution. params_json is a JSON object of parameter
 * overrides, e.g. "{\"kappa\":0.6,\"n\":2}"; NULL or "{}" uses defaults. */
rf_status rf_solution_create(const char* id, const char* params_json,
                             rf_solution** out);

void rf_solution_destroy(rf_solution* sol);

/* JSON description of one instance (id, resolved params, eos, symmetry,
 * default region, declared class). */
char* rf_solution_describe_json(const rf_solution* sol);

/* Field, gradient and fluid data at one point. For planar solutions r is
 * the Cartesian coordinate (may be negative) and theta is ignored. */
typedef struct rf_sample {
  double t, r, theta;
  int in_domain;             /* 0/1 */
  double field;              /* scalar potential (NaN where unsupported) */
  double d_t, d_r, d_theta;  /* analytic gradient */
  double s;                  /* kinetic scalar */
  double eps, p;             /* energy density, pressure */
  double v_r, v_theta;       /* three-velocity components */
  int flow_class;            /* rf_flow_class */
} rf_sample;

rf_status rf_solution_sample(const rf_solution* sol, double t, double r,
                             double theta, rf_sample* out);

/* ------------------------------------------------------------------ */
/* Verification                                                        */

/* Scan/sampling region. For planar entries r bounds are the Cartesian
 * coordinate bounds. theta bounds are used only for axisymmetric entries.
 * Pass counts <= 0 to use defaults. */
typedef struct rf_region {
  double t_min, t_max;
  double r_min, r_max;
  double theta_min, theta_max;
  int nt, nr, ntheta;
} rf_region;

typedef struct rf_verify_config {
  double h_rel;         /* base stencil step / local scale   (default 1e-3) */
  int levels;           /* h-halving refinement levels       (default 4)    */
  int points;           /* random interior sample points     (default 50)   */
  uint64_t seed;        /* RNG seed, reports are reproducible (default 42)  */
  double buffer_rel;    /* relative domain buffer            (default 1e-8) */
  int jobs;             /* parallel-map width, >=1           (default 1)    */
} rf_verify_config;

void rf_verify_config_init(rf_verify_config* cfg);

/* Residual verification of one solution: field-equation and
 * conservation-law residuals at random interior points with h-refinement,
 * plus an admissibility lattice scan. region==NULL uses the solution's
 * default region. Returns a JSON report; report field "pass" carries the
 * verdict (orders within band or at round-off floor, admissibility
 * matching the declared class). */
rf_status rf_verify_run(const rf_solution* sol, const rf_region* region,
                        const rf_verify_config* cfg, char** report_json);

/* Lattice scan: CSV rows (coords, fluid state, class, residuals) plus the
 * aggregate JSON report. Either output pointer may be NULL. */
rf_status rf_scan_run(const rf_solution* sol, const rf_region* region,
                      const rf_verify_config* cfg, char** csv,
                      char** report_json);

/* Energy-momentum flux through the solution's light-like boundary
 * (t - r = t1). t1_override may be NaN to use the declared boundary.
 * Fails with RF_ERR_NOT_SUPPORTED if the solution declares none. */
rf_status rf_vacuum_flux_run(const rf_solution* sol, int samples,
                             double t1_override, char** report_json);

/* ------------------------------------------------------------------ */
/* Finite-volume solver                                                */

typedef enum rf_boundary_mode {
  RF_BOUNDARY_EXACT = 0,    /* time-dependent Dirichlet from the solution */
  RF_BOUNDARY_OUTFLOW = 1,
  RF_BOUNDARY_PERIODIC = 2
} rf_boundary_mode;

typedef struct rf_solver_config {
  double cfl;               /* in (0,1), default 0.5 */
  double t_start, t_end;    /* NaN: derive from the solution's region */
  double r_min, r_max;      /* NaN: derive from the solution's region */
  int boundary_mode;        /* rf_boundary_mode, default EXACT */
} rf_solver_config;

void rf_solver_config_init(rf_solver_config* cfg);

/* Initialize grids from the solution at t_start, evolve each resolution to
 * t_end, compare with the exact solution. Returns the error table as CSV:
 * resolution, l1_eps, linf_eps, l1_v, order_estimate. */
rf_status rf_solve_comparison(const rf_solution* sol,
                              const rf_solver_config* cfg,
                              const int* resolutions, int n_resolutions,
                              char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RELFLOW_H */
