#include "metric_ripple/metric_ripple.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "metric_ripple/error.hpp"
#include "metric_ripple/fringe.hpp"
#include "metric_ripple/geodesic.hpp"
#include "metric_ripple/interference.hpp"
#include "metric_ripple/pulse.hpp"
#include "metric_ripple/tt_gauge.hpp"

namespace mr = metric_ripple;

struct mr_trace {
  mr::IterationTrace trace;
};

struct mr_path {
  std::vector<mr_point> points;
};

struct mr_trajectory {
  mr::Trajectory traj;
};

struct mr_profile {
  std::vector<mr::ScreenSample> samples;
};

namespace {

thread_local std::string g_last_error;

mr_status fail(mr_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
mr_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return MR_OK;
  } catch (const mr::Error& e) {
    switch (e.code()) {
      case mr::ErrorCode::InvalidArgument: return fail(MR_ERR_INVALID_ARGUMENT, e.what());
      case mr::ErrorCode::Precondition: return fail(MR_ERR_PRECONDITION, e.what());
      case mr::ErrorCode::NotConverged: return fail(MR_ERR_NOT_CONVERGED, e.what());
    }
    return fail(MR_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MR_ERR_INTERNAL, "unknown error");
  }
}

template <typename... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

mr_status null_pointer() { return fail(MR_ERR_NULL_POINTER, "null pointer argument"); }

mr::Complex to_cpp(mr_complex c) { return {c.re, c.im}; }
mr_complex to_c(mr::Complex c) { return {c.real(), c.imag()}; }

mr::SymTensor3 to_cpp(const mr_tensor& t) {
  mr::SymTensor3::Matrix m{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m[j][k] = to_cpp(t.e[j][k]);
  return mr::SymTensor3(m);
}

mr_tensor to_c(const mr::SymTensor3& t) {
  mr_tensor out{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) out.e[j][k] = to_c(t(j, k));
  return out;
}

mr::SymTensor3 real_tensor(const double a[3][3]) {
  mr::SymTensor3::Matrix m{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m[j][k] = a[j][k];
  return mr::SymTensor3(m);
}

mr::GaussianPacket to_cpp(const mr_packet& p) {
  mr::GaussianPacket out;
  out.amplitude = real_tensor(p.amplitude);
  out.k_prime = p.k_prime;
  out.omega = p.omega;
  out.z_center = p.z_center;
  out.sigma = p.sigma;
  out.validate();
  return out;
}

mr::TwoSlitSetup to_cpp(const mr_two_slit& s) {
  mr::TwoSlitSetup out;
  out.d = s.d;
  out.D = s.screen_distance;
  out.lambda = s.lambda;
  out.packet = to_cpp(s.packet);
  out.validate();
  return out;
}

mr::FringeMap to_cpp(const mr_fringe_map& m) {
  mr::FringeMap out{m.a2, m.c};
  out.validate();
  return out;
}

mr::Vec3 to_vec(const double v[3]) { return {v[0], v[1], v[2]}; }

mr::SamplingMode to_cpp(mr_sampling mode) {
  return mode == MR_SAMPLE_COMOVING ? mr::SamplingMode::Comoving
                                    : mr::SamplingMode::InitialPosition;
}

mr::KernelConvention to_cpp(mr_convention c) {
  return c == MR_CONVENTION_PAPER ? mr::KernelConvention::Paper
                                  : mr::KernelConvention::Standard;
}

}  // namespace

extern "C" {

const char* mr_last_error(void) { return g_last_error.c_str(); }

const char* mr_status_string(mr_status status) {
  switch (status) {
    case MR_OK: return "ok";
    case MR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MR_ERR_PRECONDITION: return "precondition violated";
    case MR_ERR_NOT_CONVERGED: return "not converged";
    case MR_ERR_NULL_POINTER: return "null pointer";
    case MR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mr_version(void) { return "1.0.0"; }

/* metric core */

mr_status mr_evaluate_packet(const mr_packet* p, double z, double t, mr_tensor* out) {
  if (any_null(p, out)) return null_pointer();
  return guarded([&] { *out = to_c(mr::evaluate_packet(to_cpp(*p), z, t)); });
}

mr_status mr_perturbed_metric(const mr_tensor* psi, double out[4][4]) {
  if (any_null(psi, out)) return null_pointer();
  return guarded([&] {
    const mr::Metric4 g = mr::perturbed_metric(mr::Metric4::minkowski(), to_cpp(*psi));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i][j] = g(i, j);
  });
}

mr_status mr_envelope_half_width(const mr_packet* p, double* out) {
  if (any_null(p, out)) return null_pointer();
  return guarded([&] { *out = mr::envelope_half_width(to_cpp(*p)); });
}

/* TT gauge */

mr_status mr_check_tt(const mr_tensor* a, const double propagation[3], double tol,
                      mr_gauge_report* out) {
  if (any_null(a, propagation, out)) return null_pointer();
  return guarded([&] {
    const mr::GaugeReport r = mr::check_tt(to_cpp(*a), to_vec(propagation), tol);
    *out = {r.transversality_u, r.transversality_k, r.trace, r.passed ? 1 : 0};
  });
}

mr_status mr_tt_project(const mr_tensor* a, const double propagation[3], mr_tensor* out) {
  if (any_null(a, propagation, out)) return null_pointer();
  return guarded([&] { *out = to_c(mr::tt_project(to_cpp(*a), to_vec(propagation))); });
}

mr_status mr_curvature_j0k0(const mr_packet* p, double z, double t, mr_tensor* out) {
  if (any_null(p, out)) return null_pointer();
  return guarded([&] { *out = to_c(mr::curvature_j0k0(to_cpp(*p), z, t)); });
}

/* geodesic */

mr_status mr_closed_form_position(const mr_packet* p, const double x0[3], const double v0[3],
                                  double t, mr_sampling mode, double out[3]) {
  if (any_null(p, x0, v0, out)) return null_pointer();
  return guarded([&] {
    const mr::Vec3 x = mr::closed_form_position(to_cpp(*p), to_vec(x0), to_vec(v0), t,
                                                to_cpp(mode));
    for (int j = 0; j < 3; ++j) out[j] = x[j];
  });
}

mr_status mr_integrate_deviation(const mr_packet* p, const double x0[3], const double v0[3],
                                 double t_end, double dt, mr_sampling mode,
                                 mr_trajectory** out) {
  if (any_null(p, x0, v0, out)) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    auto traj = mr::integrate_deviation(to_cpp(*p), to_vec(x0), to_vec(v0), t_end, dt,
                                        to_cpp(mode));
    *out = new mr_trajectory{std::move(traj)};
  });
}

mr_status mr_deviation_report(const mr_packet* p, const double x0[3], const double v0[3],
                              double t_end, double dt, mr_sampling mode, double* out) {
  if (any_null(p, x0, v0, out)) return null_pointer();
  return guarded([&] {
    *out = mr::deviation_report(to_cpp(*p), to_vec(x0), to_vec(v0), t_end, dt, to_cpp(mode));
  });
}

size_t mr_trajectory_size(const mr_trajectory* traj) {
  return traj ? traj->traj.samples.size() : 0;
}

mr_status mr_trajectory_sample(const mr_trajectory* traj, size_t i, mr_state* out) {
  if (any_null(traj, out)) return null_pointer();
  if (i >= traj->traj.samples.size())
    return fail(MR_ERR_INVALID_ARGUMENT, "trajectory index out of range");
  const mr::ParticleState& s = traj->traj.samples[i];
  for (int j = 0; j < 3; ++j) {
    out->position[j] = s.position[j];
    out->velocity[j] = s.velocity[j];
  }
  out->t = s.t;
  return MR_OK;
}

void mr_trajectory_free(mr_trajectory* traj) { delete traj; }

/* two-slit interference */

mr_status mr_two_slit_init(double d, double screen_distance, double lambda,
                           const double amplitude[3][3], double omega, double z_center,
                           double sigma, mr_two_slit* out) {
  if (any_null(amplitude, out)) return null_pointer();
  return guarded([&] {
    const auto s = mr::TwoSlitSetup::make(d, screen_distance, lambda, real_tensor(amplitude),
                                          omega, z_center, sigma);
    out->d = s.d;
    out->screen_distance = s.D;
    out->lambda = s.lambda;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out->packet.amplitude[j][k] = amplitude[j][k];
    out->packet.k_prime = s.packet.k_prime;
    out->packet.omega = omega;
    out->packet.z_center = z_center;
    out->packet.sigma = sigma;
  });
}

mr_status mr_two_slit_far_field_warning(const mr_two_slit* s, int* warns) {
  if (any_null(s, warns)) return null_pointer();
  return guarded([&] { *warns = to_cpp(*s).far_field_warning().has_value() ? 1 : 0; });
}

mr_status mr_path_difference(const mr_two_slit* s, double x, double* out) {
  if (any_null(s, out)) return null_pointer();
  return guarded([&] { *out = mr::path_difference(x, to_cpp(*s)); });
}

mr_status mr_slit_wave(const mr_two_slit* s, mr_slit which, double z, double t,
                       double delta_z, mr_tensor* out) {
  if (any_null(s, out)) return null_pointer();
  return guarded([&] {
    *out = to_c(mr::slit_wave(to_cpp(*s), which == MR_SLIT_B ? mr::Slit::B : mr::Slit::A, z,
                              t, delta_z));
  });
}

mr_status mr_superpose(const mr_tensor* fields, size_t count, mr_tensor* out) {
  if (any_null(out) || (count > 0 && fields == nullptr)) return null_pointer();
  return guarded([&] {
    std::vector<mr::SymTensor3> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) v.push_back(to_cpp(fields[i]));
    *out = to_c(mr::superpose(v));
  });
}

mr_status mr_pattern_closed_form(const mr_two_slit* s, double z, double t, double x,
                                 mr_tensor* out) {
  if (any_null(s, out)) return null_pointer();
  return guarded([&] { *out = to_c(mr::pattern_closed_form(to_cpp(*s), z, t, x)); });
}

mr_status mr_displacement_x(const mr_two_slit* s, double y0, double x, double* out) {
  if (any_null(s, out)) return null_pointer();
  return guarded([&] { *out = mr::displacement_x(to_cpp(*s), y0, x); });
}

mr_status mr_screen_profile(const mr_two_slit* s, double x_min, double x_max, size_t n,
                            double y0, mr_profile** out) {
  if (any_null(s, out)) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    auto samples = mr::screen_profile(to_cpp(*s), x_min, x_max, n, y0);
    *out = new mr_profile{std::move(samples)};
  });
}

size_t mr_profile_size(const mr_profile* profile) {
  return profile ? profile->samples.size() : 0;
}

mr_status mr_profile_sample(const mr_profile* profile, size_t i, mr_screen_sample* out) {
  if (any_null(profile, out)) return null_pointer();
  if (i >= profile->samples.size())
    return fail(MR_ERR_INVALID_ARGUMENT, "profile index out of range");
  const mr::ScreenSample& s = profile->samples[i];
  out->x = s.x;
  out->delta_z = s.delta_z;
  out->displacement = s.displacement;
  out->psi = to_c(s.psi);
  return MR_OK;
}

void mr_profile_free(mr_profile* profile) { delete profile; }

/* fringe solver */

mr_status mr_table1_map(int literal_d, int exact_pi, mr_fringe_map* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] {
    const mr::FringeMap m =
        mr::table1_map({.literal_d = literal_d != 0, .exact_pi = exact_pi != 0});
    *out = {m.a2, m.c};
  });
}

mr_status mr_fringe_map_from(double a2, double lambda, double d, double screen_distance,
                             mr_fringe_map* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] {
    const mr::FringeMap m = mr::fringe_map_from(a2, lambda, d, screen_distance);
    *out = {m.a2, m.c};
  });
}

mr_status mr_fringe_map_with_pi(double a2, double lambda, double d, double screen_distance,
                                double pi, mr_fringe_map* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] {
    const mr::FringeMap m = mr::fringe_map_from(a2, lambda, d, screen_distance, pi);
    *out = {m.a2, m.c};
  });
}

mr_status mr_iterate(const mr_fringe_map* map, double x0, size_t n, mr_trace** out) {
  if (any_null(map, out)) return null_pointer();
  *out = nullptr;
  return guarded([&] { *out = new mr_trace{mr::iterate(to_cpp(*map), x0, n)}; });
}

mr_status mr_solve_fixed_point(const mr_fringe_map* map, double x0, double tol,
                               size_t max_iter, mr_trace** out) {
  if (any_null(map, out)) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    *out = new mr_trace{mr::solve_fixed_point(to_cpp(*map), x0, tol, max_iter)};
  });
}

size_t mr_trace_size(const mr_trace* trace) { return trace ? trace->trace.iterates.size() : 0; }

const double* mr_trace_iterates(const mr_trace* trace) {
  return trace ? trace->trace.iterates.data() : nullptr;
}

int mr_trace_converged(const mr_trace* trace) {
  return trace && trace->trace.converged ? 1 : 0;
}

int mr_trace_repelling(const mr_trace* trace) {
  return trace && trace->trace.repelling ? 1 : 0;
}

double mr_trace_residual(const mr_trace* trace) { return trace ? trace->trace.residual : 0.0; }

mr_status mr_trace_fixed_point(const mr_trace* trace, double* out) {
  if (any_null(trace, out)) return null_pointer();
  if (!trace->trace.fixed_point) return fail(MR_ERR_NOT_CONVERGED, "iteration did not converge");
  *out = *trace->trace.fixed_point;
  return MR_OK;
}

void mr_trace_free(mr_trace* trace) { delete trace; }

mr_status mr_cobweb(const mr_fringe_map* map, double x0, size_t n, mr_path** out) {
  if (any_null(map, out)) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    auto path = std::make_unique<mr_path>();
    for (const auto& p : mr::cobweb_data(to_cpp(*map), x0, n)) path->points.push_back({p.x, p.y});
    *out = path.release();
  });
}

size_t mr_path_size(const mr_path* path) { return path ? path->points.size() : 0; }

const mr_point* mr_path_points(const mr_path* path) {
  return path ? path->points.data() : nullptr;
}

void mr_path_free(mr_path* path) { delete path; }

mr_status mr_fringe_width(const mr_fringe_map* map, double tol, size_t max_iter, double* out) {
  if (any_null(map, out)) return null_pointer();
  return guarded([&] { *out = mr::fringe_width(to_cpp(*map), tol, max_iter); });
}

mr_status mr_fringe_width_transient(const mr_fringe_map* map, double x0, size_t index,
                                    double* out) {
  if (any_null(map, out)) return null_pointer();
  return guarded([&] { *out = mr::fringe_width_transient(to_cpp(*map), x0, index); });
}

/* pulse interaction */

mr_status mr_alpha_of(double mass, double dt, mr_complex* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] { *out = to_c(mr::alpha_of(mass, dt)); });
}

mr_status mr_gaussian_kernel_closed(mr_complex alpha, double u, mr_convention convention,
                                    mr_complex* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] {
    *out = to_c(mr::gaussian_kernel_closed(to_cpp(alpha), u, to_cpp(convention)));
  });
}

mr_status mr_gaussian_kernel_quadrature(mr_complex alpha, double u, double epsilon,
                                        double k_max, size_t n, mr_complex* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] {
    *out = to_c(mr::gaussian_kernel_quadrature(to_cpp(alpha), u, epsilon, k_max, n));
  });
}

mr_status mr_suggest_grid(mr_complex alpha, double u, double epsilon, double* k_max,
                          size_t* n) {
  if (any_null(k_max, n)) return null_pointer();
  return guarded([&] {
    const mr::QuadratureGrid g = mr::suggest_grid(to_cpp(alpha), u, epsilon);
    *k_max = g.k_max;
    *n = g.n;
  });
}

mr_status mr_psi_out(double x, double t, double v, double k_prime, double omega, double a,
                     double mass, double dt_interaction, mr_convention convention,
                     mr_complex* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] {
    const mr::PulseInput pulse{v, k_prime, omega};
    const mr::TransferParams params{a, mass, dt_interaction};
    *out = to_c(mr::psi_out(x, t, pulse, params, to_cpp(convention)));
  });
}

mr_status mr_de_broglie_wavelength(double momentum, double* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] { *out = mr::de_broglie_wavelength(momentum); });
}

mr_status mr_momentum_of(double lambda, double* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] { *out = mr::momentum_of(lambda); });
}

mr_status mr_electron_wavelength(double voltage, int relativistic, double* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] { *out = mr::electron_wavelength(voltage, relativistic != 0); });
}

mr_status mr_accelerating_voltage_of(double lambda, int relativistic, double* out) {
  if (any_null(out)) return null_pointer();
  return guarded([&] { *out = mr::accelerating_voltage_of(lambda, relativistic != 0); });
}

}  // extern "C"
