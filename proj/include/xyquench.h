#ifndef XYQUENCH_H
#define XYQUENCH_H

/* C interface to the xyquench library: exact time evolution and asymptotics
 * of two-spin entanglement, magnetization, and spin-spin correlators in an
 * infinite anisotropic XY chain after a simultaneous step quench of the
 * exchange coupling J and the transverse field h.
 *
 * All functions return a status code (XYQ_OK on success); on failure a
 * human-readable message is available from xyq_last_error().
 */

#ifdef __cplusplus
extern "C" {
#endif

#ifndef XYQ_API
#if defined(_WIN32)
#define XYQ_API
#else
#define XYQ_API __attribute__((visibility("default")))
#endif
#endif

/* Status codes; the CLI uses them verbatim as process exit codes. */
enum {
    XYQ_OK = 0,
    XYQ_ERR_USAGE = 1,    /* invalid arguments / configuration */
    XYQ_ERR_NUMERIC = 2,  /* numerical-consistency check failed */
    XYQ_ERR_RESOURCE = 3  /* out of memory, file not writable, n too large */
};

typedef struct xyq_params xyq_params;

XYQ_API const char* xyq_version(void);

/* Message for the most recent failure on this thread. */
XYQ_API const char* xyq_last_error(void);

/* Physical configuration.  gamma in [0,1]; j0/h0 apply before the quench,
 * j1/h1 after; kt >= 0 is the temperature (kt == 0 selects the exact
 * zero-temperature path); n_spins must be even and >= 4.
 * Returns NULL on invalid input (see xyq_last_error). */
XYQ_API xyq_params* xyq_params_new(double gamma, double j0, double j1,
                                   double h0, double h1, double kt,
                                   int n_spins);
XYQ_API void xyq_params_free(xyq_params* p);

/* Single-point observables.  asymptotic != 0 evaluates the dephased
 * t -> infinity limit and ignores t; otherwise t must be >= 0. */
XYQ_API int xyq_magnetization(const xyq_params* p, int asymptotic, double t,
                              double* out);
XYQ_API int xyq_spin_correlators(const xyq_params* p, int asymptotic, double t,
                                 int separation, double* sx, double* sy,
                                 double* sz);
XYQ_API int xyq_concurrence(const xyq_params* p, int asymptotic, double t,
                            int separation, double* out);

/* CSV emitters.  out_path NULL or "-" writes to stdout.  observables is a
 * comma-separated list drawn from: concurrence_r1, concurrence_r2,
 * magnetization, sx, sy, sz (sx/sy/sz use `separation`). */
XYQ_API int xyq_run_dynamics(const xyq_params* p, double t_max, int t_steps,
                             const char* observables, int separation,
                             const char* out_path);

/* Parameter sweep over one or two axes.  Axis syntax "name:min:max:steps"
 * with name one of gamma, j0, j1, h0, h1, kt, lambda, lambda0, lambda1, t.
 * axis_y may be NULL.  asymptotic != 0 evaluates the t -> infinity limit,
 * otherwise observables are evaluated at time t (or along a t axis). */
XYQ_API int xyq_run_sweep(const xyq_params* base, const char* axis_x,
                          const char* axis_y, const char* observables,
                          int separation, int asymptotic, double t,
                          const char* out_path);

/* Emit the CSV for a bundled figure preset ("1a" ... "17b").
 * n_spins <= 0 selects the default of 1000. */
XYQ_API int xyq_reproduce(const char* figure_id, int n_spins,
                          const char* out_path);

/* Run a self-check suite: "mode-propagator", "ed-small-n" or
 * "wootters-xstate".  Writes a report and returns XYQ_OK only if every
 * tolerance was met. */
XYQ_API int xyq_oracle_check(const char* suite, const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* XYQUENCH_H */
