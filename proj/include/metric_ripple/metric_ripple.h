/*
 * metric_ripple C API.
 *
 * Every function returns an mr_status. On failure a description of the most
 * recent error on the calling thread is available from mr_last_error().
 * Result collections are returned through opaque handles owned by the caller
 * and released with the matching *_free function.
 */
#ifndef METRIC_RIPPLE_H
#define METRIC_RIPPLE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(METRIC_RIPPLE_BUILD)
#    define MR_API __declspec(dllexport)
#  else
#    define MR_API __declspec(dllimport)
#  endif
#else
#  define MR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mr_status {
  MR_OK = 0,
  MR_ERR_INVALID_ARGUMENT = 1,
  MR_ERR_PRECONDITION = 2,
  MR_ERR_NOT_CONVERGED = 3,
  MR_ERR_NULL_POINTER = 4,
  MR_ERR_INTERNAL = 5
} mr_status;

typedef struct mr_complex {
  double re;
  double im;
} mr_complex;

/* Symmetric complex 3x3 tensor, row-major. */
typedef struct mr_tensor {
  mr_complex e[3][3];
} mr_tensor;

/* Gaussian packet along +z; amplitude must be real and symmetric.
 * sigma = INFINITY disables the envelope. */
typedef struct mr_packet {
  double amplitude[3][3];
  double k_prime;
  double omega;
  double z_center;
  double sigma;
} mr_packet;

typedef struct mr_two_slit {
  double d;
  double screen_distance;
  double lambda;
  mr_packet packet; /* packet.k_prime == 2 pi / lambda */
} mr_two_slit;

typedef struct mr_fringe_map {
  double a2;
  double c;
} mr_fringe_map;

typedef struct mr_gauge_report {
  double transversality_u;
  double transversality_k;
  double trace;
  int passed;
} mr_gauge_report;

typedef struct mr_state {
  double position[3];
  double velocity[3];
  double t;
} mr_state;

typedef struct mr_screen_sample {
  double x;
  double delta_z;
  double displacement;
  mr_tensor psi;
} mr_screen_sample;

typedef struct mr_point {
  double x;
  double y;
} mr_point;

typedef enum mr_slit { MR_SLIT_A = 0, MR_SLIT_B = 1 } mr_slit;
typedef enum mr_sampling { MR_SAMPLE_INITIAL = 0, MR_SAMPLE_COMOVING = 1 } mr_sampling;
typedef enum mr_convention { MR_CONVENTION_STANDARD = 0, MR_CONVENTION_PAPER = 1 } mr_convention;

typedef struct mr_trace mr_trace;
typedef struct mr_path mr_path;
typedef struct mr_trajectory mr_trajectory;
typedef struct mr_profile mr_profile;

/* ---- diagnostics ---- */
MR_API const char* mr_last_error(void);
MR_API const char* mr_status_string(mr_status status);
MR_API const char* mr_version(void);

/* ---- metric core ---- */
MR_API mr_status mr_evaluate_packet(const mr_packet* p, double z, double t, mr_tensor* out);
MR_API mr_status mr_perturbed_metric(const mr_tensor* psi, double out[4][4]);
MR_API mr_status mr_envelope_half_width(const mr_packet* p, double* out);

/* ---- TT gauge ---- */
MR_API mr_status mr_check_tt(const mr_tensor* a, const double propagation[3], double tol,
                             mr_gauge_report* out);
MR_API mr_status mr_tt_project(const mr_tensor* a, const double propagation[3], mr_tensor* out);
MR_API mr_status mr_curvature_j0k0(const mr_packet* p, double z, double t, mr_tensor* out);

/* ---- geodesic ---- */
MR_API mr_status mr_closed_form_position(const mr_packet* p, const double x0[3],
                                         const double v0[3], double t, mr_sampling mode,
                                         double out[3]);
MR_API mr_status mr_integrate_deviation(const mr_packet* p, const double x0[3],
                                        const double v0[3], double t_end, double dt,
                                        mr_sampling mode, mr_trajectory** out);
MR_API mr_status mr_deviation_report(const mr_packet* p, const double x0[3],
                                     const double v0[3], double t_end, double dt,
                                     mr_sampling mode, double* out);
MR_API size_t mr_trajectory_size(const mr_trajectory* traj);
MR_API mr_status mr_trajectory_sample(const mr_trajectory* traj, size_t i, mr_state* out);
MR_API void mr_trajectory_free(mr_trajectory* traj);

/* ---- two-slit interference ---- */
MR_API mr_status mr_two_slit_init(double d, double screen_distance, double lambda,
                                  const double amplitude[3][3], double omega,
                                  double z_center, double sigma, mr_two_slit* out);
/* *warns set to 1 when d / D > 0.01. */
MR_API mr_status mr_two_slit_far_field_warning(const mr_two_slit* s, int* warns);
MR_API mr_status mr_path_difference(const mr_two_slit* s, double x, double* out);
MR_API mr_status mr_slit_wave(const mr_two_slit* s, mr_slit which, double z, double t,
                              double delta_z, mr_tensor* out);
MR_API mr_status mr_superpose(const mr_tensor* fields, size_t count, mr_tensor* out);
MR_API mr_status mr_pattern_closed_form(const mr_two_slit* s, double z, double t, double x,
                                        mr_tensor* out);
MR_API mr_status mr_displacement_x(const mr_two_slit* s, double y0, double x, double* out);
MR_API mr_status mr_screen_profile(const mr_two_slit* s, double x_min, double x_max,
                                   size_t n, double y0, mr_profile** out);
MR_API size_t mr_profile_size(const mr_profile* profile);
MR_API mr_status mr_profile_sample(const mr_profile* profile, size_t i, mr_screen_sample* out);
MR_API void mr_profile_free(mr_profile* profile);

/* ---- fringe solver ---- */
MR_API mr_status mr_table1_map(int literal_d, int exact_pi, mr_fringe_map* out);
MR_API mr_status mr_fringe_map_from(double a2, double lambda, double d, double screen_distance,
                                    mr_fringe_map* out);
/* Same as mr_fringe_map_from with an explicit value for pi (the table uses 3.14). */
MR_API mr_status mr_fringe_map_with_pi(double a2, double lambda, double d,
                                       double screen_distance, double pi, mr_fringe_map* out);
MR_API mr_status mr_iterate(const mr_fringe_map* map, double x0, size_t n, mr_trace** out);
/* Non-convergence is not an error: inspect mr_trace_converged. */
MR_API mr_status mr_solve_fixed_point(const mr_fringe_map* map, double x0, double tol,
                                      size_t max_iter, mr_trace** out);
MR_API size_t mr_trace_size(const mr_trace* trace);
MR_API const double* mr_trace_iterates(const mr_trace* trace);
MR_API int mr_trace_converged(const mr_trace* trace);
MR_API int mr_trace_repelling(const mr_trace* trace);
MR_API double mr_trace_residual(const mr_trace* trace);
/* MR_ERR_NOT_CONVERGED when the trace has no fixed point. */
MR_API mr_status mr_trace_fixed_point(const mr_trace* trace, double* out);
MR_API void mr_trace_free(mr_trace* trace);
MR_API mr_status mr_cobweb(const mr_fringe_map* map, double x0, size_t n, mr_path** out);
MR_API size_t mr_path_size(const mr_path* path);
MR_API const mr_point* mr_path_points(const mr_path* path);
MR_API void mr_path_free(mr_path* path);
MR_API mr_status mr_fringe_width(const mr_fringe_map* map, double tol, size_t max_iter,
                                 double* out);
MR_API mr_status mr_fringe_width_transient(const mr_fringe_map* map, double x0, size_t index,
                                           double* out);

/* ---- pulse interaction ---- */
MR_API mr_status mr_alpha_of(double mass, double dt, mr_complex* out);
MR_API mr_status mr_gaussian_kernel_closed(mr_complex alpha, double u, mr_convention convention,
                                           mr_complex* out);
MR_API mr_status mr_gaussian_kernel_quadrature(mr_complex alpha, double u, double epsilon,
                                               double k_max, size_t n, mr_complex* out);
MR_API mr_status mr_suggest_grid(mr_complex alpha, double u, double epsilon, double* k_max,
                                 size_t* n);
MR_API mr_status mr_psi_out(double x, double t, double v, double k_prime, double omega,
                            double a, double mass, double dt_interaction,
                            mr_convention convention, mr_complex* out);
MR_API mr_status mr_de_broglie_wavelength(double momentum, double* out);
MR_API mr_status mr_momentum_of(double lambda, double* out);
MR_API mr_status mr_electron_wavelength(double voltage, int relativistic, double* out);
MR_API mr_status mr_accelerating_voltage_of(double lambda, int relativistic, double* out);

#ifdef __cplusplus
}
#endif

#endif /* METRIC_RIPPLE_H */
