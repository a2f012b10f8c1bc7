#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "metric_ripple/metric_ripple.h"
#include "scenario.hpp"

namespace metric_ripple::cli {
namespace {

constexpr double kPi = std::numbers::pi;

// Column 1 of the published iteration table, x_0 first.
constexpr std::array<double, 15> kTableColumn{
    5.41e-6, 3.39e-6, 4.92e-6, 3.81e-6, 4.65e-6, 4.03e-6, 4.50e-6, 4.15e-6,
    4.41e-6, 4.21e-6, 4.36e-6, 4.25e-6, 4.34e-6, 4.27e-6, 4.32e-6};
constexpr double kTableTolerance = 5e-9;
constexpr double kTablePi = 3.14;
constexpr double kLiteralTableD = 0.5e-11;
constexpr double kKernelLimit = 1e-6;

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void ok(mr_status status) {
  if (status == MR_OK) return;
  throw Failure(status == MR_ERR_NOT_CONVERGED ? 2 : 1, mr_last_error());
}

struct TraceDeleter {
  void operator()(mr_trace* p) const { mr_trace_free(p); }
};
struct PathDeleter {
  void operator()(mr_path* p) const { mr_path_free(p); }
};
struct TrajectoryDeleter {
  void operator()(mr_trajectory* p) const { mr_trajectory_free(p); }
};
struct ProfileDeleter {
  void operator()(mr_profile* p) const { mr_profile_free(p); }
};
using Trace = std::unique_ptr<mr_trace, TraceDeleter>;
using Path = std::unique_ptr<mr_path, PathDeleter>;
using TrajectoryPtr = std::unique_ptr<mr_trajectory, TrajectoryDeleter>;
using Profile = std::unique_ptr<mr_profile, ProfileDeleter>;

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

/// CSV number: lowercase scientific, 9 significant digits.
std::string e9(double v) { return fmt("%.8e", v); }
std::string sci3(double v) { return fmt("%.2e", v); }

struct Output {
  std::vector<std::pair<std::string, std::string>> files;
  std::ostringstream summary;
  int code = 0;
};

struct CheckLine {
  bool pass;
  std::string text;
};

// ---- scenario -> C structs ----

mr_fringe_map fringe_map(const Scenario& s) {
  const double d = s.literal_table_d ? kLiteralTableD : s.d;
  const double pi = s.exact_pi ? kPi : kTablePi;
  mr_fringe_map map{};
  ok(mr_fringe_map_with_pi(s.a2, s.lambda, d, s.D, pi, &map));
  return map;
}

void amplitude_matrix(const Scenario& s, double out[3][3]) {
  const auto& a = s.amplitude;
  const double m[3][3] = {{a[0], a[1], a[2]}, {a[1], a[3], a[4]}, {a[2], a[4], a[5]}};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) out[j][k] = m[j][k];
}

mr_packet packet_of(const Scenario& s) {
  mr_packet p{};
  amplitude_matrix(s, p.amplitude);
  p.k_prime = 2.0 * kPi / s.lambda;
  p.omega = s.omega;
  p.z_center = s.z_prime;
  p.sigma = s.sigma;
  return p;
}

mr_two_slit two_slit_of(const Scenario& s) {
  double amp[3][3];
  amplitude_matrix(s, amp);
  mr_two_slit setup{};
  ok(mr_two_slit_init(s.d, s.D, s.lambda, amp, s.omega, s.z_prime, s.sigma, &setup));
  return setup;
}

mr_convention convention_of(const Scenario& s) {
  return s.convention == "paper" ? MR_CONVENTION_PAPER : MR_CONVENTION_STANDARD;
}

mr_sampling sampling_of(const Scenario& s) {
  return s.sampling == "comoving" ? MR_SAMPLE_COMOVING : MR_SAMPLE_INITIAL;
}

std::vector<double> iterates(const mr_fringe_map& map, double x0, std::size_t n) {
  mr_trace* raw = nullptr;
  ok(mr_iterate(&map, x0, n, &raw));
  Trace trace(raw);
  const double* xs = mr_trace_iterates(trace.get());
  return {xs, xs + mr_trace_size(trace.get())};
}

struct FixedPoint {
  double x = 0.0;
  double residual = 0.0;
  std::size_t steps = 0;
};

FixedPoint fixed_point(const mr_fringe_map& map, double x0, double tol, std::size_t max_iter) {
  mr_trace* raw = nullptr;
  ok(mr_solve_fixed_point(&map, x0, tol, max_iter, &raw));
  Trace trace(raw);
  if (!mr_trace_converged(trace.get()))
    throw Failure(2, "fixed point iteration did not converge within max_iter = " +
                         std::to_string(max_iter));
  if (mr_trace_repelling(trace.get()))
    throw Failure(2, "fixed point is repelling (|f'(x*)| >= 1)");
  FixedPoint fp;
  ok(mr_trace_fixed_point(trace.get(), &fp.x));
  fp.residual = mr_trace_residual(trace.get());
  fp.steps = mr_trace_size(trace.get()) - 1;
  return fp;
}

double map_slope(const mr_fringe_map& map, double x) {
  return std::abs(map.a2 * map.c * std::sin(map.c * x));
}

double bisect_fixed_point(const mr_fringe_map& map) {
  auto g = [&](double x) { return x - map.a2 * std::cos(map.c * x); };
  double lo = 0.0, hi = map.a2;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---- oracles shared by `pulse --check-oracle` and `check` ----

struct KernelOracle {
  double worst = 0.0;
  std::size_t cases = 0;
};

KernelOracle kernel_oracle(const Scenario& s) {
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> re(0.1, 10.0), im(-10.0, 10.0), uu(-5.0, 5.0);
  KernelOracle result;
  for (std::size_t i = 0; i < s.oracle_cases; ++i) {
    const mr_complex alpha{re(rng), im(rng)};
    const double u = uu(rng);
    double k_max = 0.0;
    std::size_t n = 0;
    ok(mr_suggest_grid(alpha, u, s.epsilon, &k_max, &n));
    mr_complex quad{}, closed{};
    ok(mr_gaussian_kernel_quadrature(alpha, u, s.epsilon, k_max, n, &quad));
    ok(mr_gaussian_kernel_closed(alpha, u, MR_CONVENTION_STANDARD, &closed));
    const double err = std::hypot(quad.re - closed.re, quad.im - closed.im) /
                       std::hypot(closed.re, closed.im);
    result.worst = std::max(result.worst, err);
    ++result.cases;
  }
  return result;
}

std::string kernel_line(const KernelOracle& k) {
  return "gaussian kernel: max relative error closed vs quadrature = " + e9(k.worst) + " over " +
         std::to_string(k.cases) + " cases (limit " + sci3(kKernelLimit) + ")";
}

double tensor_diff(const mr_tensor& a, const mr_tensor& b) {
  double m = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      m = std::max(m, std::hypot(a.e[j][k].re - b.e[j][k].re, a.e[j][k].im - b.e[j][k].im));
  return m;
}

CheckLine check_table(const Scenario& s) {
  const std::vector<double> xs = iterates(fringe_map(s), kTableColumn[0], kTableColumn.size() - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < kTableColumn.size(); ++i)
    worst = std::max(worst, std::abs(xs[i] - kTableColumn[i]));
  return {worst <= kTableTolerance, "table regression: max |x_n - table| = " + e9(worst) +
                                        " m over 15 rows (limit " + sci3(kTableTolerance) + ")"};
}

CheckLine check_fixed_point(const Scenario& s) {
  const mr_fringe_map map = fringe_map(s);
  const FixedPoint fp = fixed_point(map, s.x0, 1e-13, 100000);
  const double bis = bisect_fixed_point(map);
  const bool pass = std::abs(fp.x - 4.3008e-6) <= 5e-9 && std::abs(fp.x - bis) <= 1e-12;
  return {pass, "fixed point: x* = " + e9(fp.x) + " m, bisection " + e9(bis) +
                    " m, |diff| = " + e9(std::abs(fp.x - bis)) + " m"};
}

CheckLine check_fringe_width(const Scenario& s) {
  const mr_fringe_map map = fringe_map(s);
  double width = 0.0, transient = 0.0;
  ok(mr_fringe_width(&map, s.tol, s.max_iter, &width));
  ok(mr_fringe_width_transient(&map, kTableColumn[0], 5, &transient));
  const bool pass = width >= 7.0e-6 && width <= 9.0e-6 && std::abs(transient - 8.06e-6) <= 1e-8;
  return {pass, "fringe width: 2x* = " + e9(width) + " m; transient 2*x_5 = " + e9(transient) +
                    " m (table: 2 x 4.03e-06 = 8.06e-06)"};
}

CheckLine check_literal_d(const Scenario& s) {
  Scenario literal = s;
  literal.literal_table_d = true;
  const FixedPoint fp = fixed_point(fringe_map(literal), s.x0, s.tol, s.max_iter);
  return {fp.x >= 5.9e-6, "literal table d = 5e-12 m: x* = " + e9(fp.x) +
                              " m (cos argument ~ 0, not the table's 4.30e-06)"};
}

CheckLine check_superposition(const Scenario& s) {
  Scenario flat = s;
  flat.sigma = INFINITY;
  const mr_two_slit setup = two_slit_of(flat);
  std::mt19937_64 rng(s.seed + 1);
  std::uniform_real_distribution<double> uz(-1e-10, 1e-10), ut(0.0, 1e-3),
      ux(s.profile.min, s.profile.max);
  double scale = 0.0;
  for (double a : s.amplitude) scale = std::max(scale, std::abs(a));
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double z = uz(rng), t = ut(rng), x = ux(rng);
    double dz = 0.0;
    ok(mr_path_difference(&setup, x, &dz));
    std::array<mr_tensor, 2> pair{};
    ok(mr_slit_wave(&setup, MR_SLIT_A, z, t, dz, &pair[0]));
    ok(mr_slit_wave(&setup, MR_SLIT_B, z, t, dz, &pair[1]));
    mr_tensor direct{}, closed{};
    ok(mr_superpose(pair.data(), pair.size(), &direct));
    ok(mr_pattern_closed_form(&setup, z, t, x, &closed));
    worst = std::max(worst, tensor_diff(direct, closed) / (2.0 * scale));
  }
  return {worst <= 1e-14, "superposition: max relative |direct - closed form| = " + e9(worst) +
                              " over 1000 points (limit 1e-14)"};
}

CheckLine check_geodesic(const Scenario& s) {
  if (!(s.omega > 0)) throw Failure(1, "omega: must be positive for the geodesic check");
  const double period = 2.0 * kPi / s.omega;
  const std::array<double, 3> amps{1e-7, 1e-6, 1e-5};
  const double x0[3] = {0.0, 6e-6, 0.0}, v0[3] = {0.0, 0.0, 0.0};
  std::array<double, 3> errs{};
  for (std::size_t i = 0; i < amps.size(); ++i) {
    Scenario one = s;
    one.amplitude = {0.0, amps[i], 0.0, 0.0, 0.0, 0.0};
    const mr_packet p = packet_of(one);
    ok(mr_deviation_report(&p, x0, v0, period, period / 1000.0, MR_SAMPLE_INITIAL, &errs[i]));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double lx = std::log(amps[i]), ly = std::log(errs[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);
  const double rel = errs[1] / x0[1];
  const bool pass = slope >= 1.8 && slope <= 2.2 && rel <= 1e-10;
  return {pass, "geodesic: log-log slope of |closed form - integrator| vs |A| = " + fmt("%.4f", slope) +
                    ", relative error at |A| = 1e-6: " + e9(rel)};
}

CheckLine check_gauge(const Scenario& s) {
  std::mt19937_64 rng(s.seed + 2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::normal_distribution<double> g(0.0, 1.0);
  int failures = 0;
  double worst_idem = 0.0;
  const int cases = 1000;
  for (int i = 0; i < cases; ++i) {
    mr_tensor a{};
    for (int j = 0; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        a.e[j][k] = {u(rng), u(rng)};
        a.e[k][j] = a.e[j][k];
      }
    double n[3];
    double norm = 0.0;
    do {
      for (double& c : n) c = g(rng);
      norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    } while (norm < 1e-3);
    for (double& c : n) c /= norm;
    mr_tensor tt{}, tt2{};
    ok(mr_tt_project(&a, n, &tt));
    ok(mr_tt_project(&tt, n, &tt2));
    mr_gauge_report report{};
    ok(mr_check_tt(&tt, n, 1e-12, &report));
    if (!report.passed) ++failures;
    worst_idem = std::max(worst_idem, tensor_diff(tt, tt2));
  }
  const bool pass = failures == 0 && worst_idem <= 1e-14;
  return {pass, "gauge: " + std::to_string(cases - failures) + "/" + std::to_string(cases) +
                    " projections pass the TT check at 1e-12; max idempotence error " +
                    e9(worst_idem)};
}

std::vector<CheckLine> de_broglie_report(const Scenario& s) {
  double rel50 = 0.0, nonrel50 = 0.0, v_rel = 0.0, v_nonrel = 0.0;
  ok(mr_electron_wavelength(5e4, 1, &rel50));
  ok(mr_electron_wavelength(5e4, 0, &nonrel50));
  ok(mr_accelerating_voltage_of(s.lambda, 1, &v_rel));
  ok(mr_accelerating_voltage_of(s.lambda, 0, &v_nonrel));
  const bool reproduced = std::abs(rel50 - 5.36e-12) <= 5e-15;
  const bool inconsistent = std::abs(rel50 - s.lambda) > 0.01 * s.lambda;
  std::vector<CheckLine> lines;
  lines.push_back({reproduced, "de Broglie: 50 kV electron wavelength = " + e9(rel50) +
                                   " m relativistic (" + e9(nonrel50) + " m non-relativistic)"});
  lines.push_back({reproduced, "de Broglie: configured lambda = " + e9(s.lambda) +
                                   " m corresponds to " + fmt("%.1f", v_rel) + " V (" +
                                   fmt("%.1f", v_nonrel) + " V non-relativistic)"});
  lines.push_back({reproduced, std::string("inconsistency: ") +
                                   (inconsistent ? "50 kV electrons do NOT give lambda = "
                                                 : "50 kV electrons match lambda = ") +
                                   sci3(s.lambda) + " m (ratio " + fmt("%.2f", s.lambda / rel50) +
                                   ")"});
  return lines;
}

// ---- subcommands ----

void cmd_table1(const Scenario& s, Output& o) {
  const mr_fringe_map map = fringe_map(s);
  const std::vector<double> xs = iterates(map, s.x0, s.iterations);
  const FixedPoint fp = fixed_point(map, s.x0, s.tol, s.max_iter);

  std::string csv = "n,x\n";
  for (std::size_t i = 0; i < xs.size(); ++i) csv += std::to_string(i) + "," + e9(xs[i]) + "\n";
  o.files.emplace_back("iterates.csv", std::move(csv));

  auto& out = o.summary;
  out << "map: f(x) = a2 cos(c x), a2 = " << e9(map.a2) << " m, c = " << e9(map.c) << " 1/m"
      << " (pi = " << (s.exact_pi ? "exact" : "3.14") << ", d = "
      << e9(s.literal_table_d ? kLiteralTableD : s.d) << " m)\n";
  out << "fixed point: x* = " << sci3(fp.x) << " m (" << e9(fp.x) << ", " << fp.steps
      << " steps, last step " << e9(fp.residual) << " m)\n";
  out << "contraction: |f'(x*)| = " << fmt("%.4f", map_slope(map, fp.x)) << "\n";
  out << "fringe width: 2x* = " << sci3(2.0 * fp.x) << " m\n";
  if (xs.size() > 5)
    out << "transient width: 2*x_5 = " << sci3(2.0 * xs[5]) << " m (" << e9(2.0 * xs[5]) << ")\n";
  if (s.literal_table_d)
    out << "note: with the literal table d the cos argument c*x* = " << e9(map.c * fp.x)
        << " rad, so x* ~ a2 instead of 4.30e-06 m\n";
}

void cmd_cobweb(const Scenario& s, Output& o) {
  const mr_fringe_map map = fringe_map(s);
  mr_path* raw = nullptr;
  ok(mr_cobweb(&map, s.x0, s.iterations, &raw));
  Path path(raw);
  const mr_point* pts = mr_path_points(path.get());
  const std::size_t n = mr_path_size(path.get());
  std::string csv = "i,x,y\n";
  for (std::size_t i = 0; i < n; ++i)
    csv += std::to_string(i) + "," + e9(pts[i].x) + "," + e9(pts[i].y) + "\n";
  o.files.emplace_back("cobweb.csv", std::move(csv));
  o.summary << "cobweb: " << n << " vertices from x0 = " << e9(s.x0) << " m, last x = "
            << e9(pts[n - 1].x) << " m\n";
}

void cmd_two_slit(const Scenario& s, Output& o, std::ostream& err) {
  const mr_two_slit setup = two_slit_of(s);
  int warns = 0;
  ok(mr_two_slit_far_field_warning(&setup, &warns));
  if (warns) err << "warning: d/D = " << e9(s.d / s.D) << " exceeds the far-field limit 0.01\n";
  double on_axis = 0.0;
  ok(mr_displacement_x(&setup, s.y0, 0.0, &on_axis));

  mr_profile* raw = nullptr;
  ok(mr_screen_profile(&setup, s.profile.min, s.profile.max, s.profile.n, s.y0, &raw));
  Profile profile(raw);
  std::string csv = "x,delta_z,displacement,psi12_re,psi12_im\n";
  double peak = 0.0;
  const std::size_t n = mr_profile_size(profile.get());
  for (std::size_t i = 0; i < n; ++i) {
    mr_screen_sample sample{};
    ok(mr_profile_sample(profile.get(), i, &sample));
    peak = std::max(peak, std::abs(sample.displacement));
    csv += e9(sample.x) + "," + e9(sample.delta_z) + "," + e9(sample.displacement) + "," +
           e9(sample.psi.e[0][1].re) + "," + e9(sample.psi.e[0][1].im) + "\n";
  }
  o.files.emplace_back("profile.csv", std::move(csv));
  o.summary << "two-slit: on-axis displacement = " << e9(on_axis) << " m\n";
  o.summary << "two-slit: max |displacement| on profile = " << e9(peak) << " m\n";
  o.summary << "two-slit: fringe spacing lambda D / d = " << e9(s.lambda * s.D / s.d) << " m\n";
}

void cmd_geodesic(const Scenario& s, Output& o) {
  const mr_packet p = packet_of(s);
  mr_tensor a{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) a.e[j][k] = {p.amplitude[j][k], 0.0};
  const double n[3] = {0.0, 0.0, 1.0};
  mr_gauge_report gauge{};
  ok(mr_check_tt(&a, n, 1e-12, &gauge));
  o.summary << "gauge: transversality(k) = " << e9(gauge.transversality_k)
            << ", trace = " << e9(gauge.trace) << ", " << (gauge.passed ? "TT" : "not TT")
            << "\n";
  if (!gauge.passed)
    throw Failure(1, "amplitude: not transverse-traceless along +z (transversality " +
                         e9(gauge.transversality_k) + ", trace " + e9(gauge.trace) + ")");

  const mr_sampling mode = sampling_of(s);
  mr_trajectory* raw = nullptr;
  ok(mr_integrate_deviation(&p, s.position.data(), s.velocity.data(), s.t_end, s.dt, mode, &raw));
  TrajectoryPtr traj(raw);
  double deviation = 0.0;
  ok(mr_deviation_report(&p, s.position.data(), s.velocity.data(), s.t_end, s.dt, mode,
                         &deviation));

  std::string csv = "t,x,y,z,vx,vy,vz,closed_x,closed_y,closed_z\n";
  const std::size_t count = mr_trajectory_size(traj.get());
  for (std::size_t i = 0; i < count; ++i) {
    mr_state st{};
    ok(mr_trajectory_sample(traj.get(), i, &st));
    double closed[3];
    ok(mr_closed_form_position(&p, s.position.data(), s.velocity.data(), st.t, mode, closed));
    csv += e9(st.t);
    for (double c : st.position) csv += "," + e9(c);
    for (double c : st.velocity) csv += "," + e9(c);
    for (double c : closed) csv += "," + e9(c);
    csv += "\n";
  }
  o.files.emplace_back("trajectory.csv", std::move(csv));
  o.summary << "geodesic: " << count << " samples, max |closed form - integrator| = "
            << e9(deviation) << " m\n";
}

void cmd_pulse(const Scenario& s, bool check_oracle, Output& o) {
  const double k_prime = 2.0 * kPi / s.lambda;
  mr_complex alpha{};
  ok(mr_alpha_of(s.m, s.dt_interaction, &alpha));
  std::string csv = "x,psi_re,psi_im,psi_abs\n";
  const Range& r = s.pulse_profile;
  for (std::size_t i = 0; i < r.n; ++i) {
    const double w = static_cast<double>(i), span = static_cast<double>(r.n - 1);
    const double x = ((span - w) * r.min + w * r.max) / span;
    mr_complex psi{};
    ok(mr_psi_out(x, s.t, s.v, k_prime, s.omega, s.a, s.m, s.dt_interaction, convention_of(s),
                  &psi));
    csv += e9(x) + "," + e9(psi.re) + "," + e9(psi.im) + "," + e9(std::hypot(psi.re, psi.im)) +
           "\n";
  }
  o.summary << "pulse: alpha = " << e9(alpha.re) << " " << e9(alpha.im) << "i m^2, centre x' = v t = "
            << e9(s.v * s.t) << " m, convention " << s.convention << "\n";
  if (check_oracle) {
    const KernelOracle k = kernel_oracle(s);
    const bool pass = k.worst <= kKernelLimit;
    o.summary << (pass ? "[ok]   " : "[FAIL] ") << kernel_line(k) << "\n";
    if (!pass) {
      o.code = 2;
      return;
    }
  }
  o.files.emplace_back("pulse.csv", std::move(csv));
}

void cmd_check(const Scenario& s, Output& o) {
  std::vector<CheckLine> lines;
  lines.push_back(check_table(s));
  lines.push_back(check_fixed_point(s));
  lines.push_back(check_fringe_width(s));
  lines.push_back(check_literal_d(s));
  const KernelOracle k = kernel_oracle(s);
  lines.push_back({k.worst <= kKernelLimit, kernel_line(k)});
  lines.push_back(check_superposition(s));
  lines.push_back(check_geodesic(s));
  lines.push_back(check_gauge(s));
  for (CheckLine& l : de_broglie_report(s)) lines.push_back(std::move(l));

  std::size_t failed = 0;
  for (const CheckLine& l : lines) {
    o.summary << (l.pass ? "[ok]   " : "[FAIL] ") << l.text << "\n";
    if (!l.pass) ++failed;
  }
  o.summary << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
            << "\n";
  o.files.emplace_back("check.txt", o.summary.str());
  if (failed) o.code = 2;
}

void write_files(const Scenario& s, const Output& o, std::ostream& out) {
  const std::filesystem::path dir(s.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Failure(1, "out: cannot create directory '" + s.out + "': " + ec.message());
  for (const auto& [name, content] : o.files) {
    const std::filesystem::path path = dir / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    if (!f) throw Failure(1, "out: cannot write '" + path.string() + "'");
    out << "wrote " << path.string() << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gravitational-wave packet, two-slit fringe and pulse model toolkit",
               "metric-ripple"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir, tol, max_iter, profile, x0, convention, lambda;
  std::vector<std::string> sets;
  bool literal_d = false, exact_pi = false, show_config = false, check_oracle = false;

  app.add_option("--config", config_path, "scenario file of key = value lines");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--tol", tol, "fixed point step tolerance [m]");
  app.add_option("--max-iter", max_iter, "fixed point iteration cap");
  app.add_option("--profile", profile, "screen range MIN:MAX:N [m]");
  app.add_option("--x0", x0, "fringe map start [m]");
  app.add_option("--lambda", lambda, "carrier wavelength [m]");
  app.add_option("--convention", convention, "kernel prefactor")
      ->check(CLI::IsMember({"standard", "paper"}));
  app.add_flag("--literal-table-d", literal_d, "use d = 0.5e-11 m as printed in the table");
  app.add_flag("--exact-pi", exact_pi, "use exact pi instead of the table's 3.14");
  app.add_option("--set", sets, "override any scenario key: KEY=VALUE (repeatable)");
  app.add_flag("--show-config", show_config, "print the effective scenario and exit");

  app.add_subcommand("table1", "iterate the fringe map and solve for the fixed point");
  app.add_subcommand("cobweb", "write cobweb vertices of the fringe map");
  app.add_subcommand("two-slit", "write the screen displacement profile");
  app.add_subcommand("geodesic", "integrate a test-mass geodesic and compare to first order");
  CLI::App* pulse = app.add_subcommand("pulse", "write the pulse output envelope");
  pulse->add_flag("--check-oracle", check_oracle, "compare closed-form kernel to quadrature");
  app.add_subcommand("check", "run every oracle and the wavelength consistency report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  const std::string mode = app.get_subcommands().front()->get_name();

  try {
    Scenario s = config_path.empty() ? Scenario{} : load_scenario(config_path);
    s.mode = mode;
    for (const std::string& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw ScenarioError("set", "--set expects KEY=VALUE, got '" + kv + "'");
      apply(s, kv.substr(0, eq), kv.substr(eq + 1));
    }
    const std::pair<const std::string*, const char*> flags[] = {
        {&out_dir, "out"},         {&tol, "tol"}, {&max_iter, "max_iter"},
        {&profile, "profile"},     {&x0, "x0"},   {&convention, "convention"},
        {&lambda, "lambda"}};
    for (const auto& [value, key] : flags)
      if (!value->empty()) apply(s, key, *value);
    if (literal_d) s.literal_table_d = true;
    if (exact_pi) s.exact_pi = true;

    validate(s, mode);
    if (show_config) {
      out << "mode = " << mode << "\n" << describe(s);
      return 0;
    }

    Output o;
    if (mode == "table1") cmd_table1(s, o);
    else if (mode == "cobweb") cmd_cobweb(s, o);
    else if (mode == "two-slit") cmd_two_slit(s, o, err);
    else if (mode == "geodesic") cmd_geodesic(s, o);
    else if (mode == "pulse") cmd_pulse(s, check_oracle, o);
    else if (mode == "check") cmd_check(s, o);

    if (o.code != 0) {
      out << o.summary.str();
      return o.code;
    }
    write_files(s, o, out);
    out << o.summary.str();
    return 0;
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Failure& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  }
}

}  // namespace metric_ripple::cli
