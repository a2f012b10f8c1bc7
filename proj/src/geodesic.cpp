#include "metric_ripple/geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "metric_ripple/error.hpp"
#include "metric_ripple/tt_gauge.hpp"

namespace metric_ripple {
namespace {

constexpr Vec3 kPropagation{0.0, 0.0, 1.0};

void require_tt(const GaussianPacket& p) {
  require(check_tt(p.amplitude, kPropagation, 1e-12).passed,
          "geodesic: packet amplitude is not transverse-traceless along +z",
          ErrorCode::Precondition);
}

double sample_z(SamplingMode mode, double z0, double vz, double elapsed) {
  return mode == SamplingMode::Comoving ? z0 + vz * elapsed : z0;
}

Vec3 axpy(const Vec3& x, double a, const Vec3& y) {
  return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2]};
}

std::size_t checked_steps(double t_end, double dt) {
  require(dt > 0 && std::isfinite(dt), "integrate_deviation: dt must be positive");
  require(t_end >= 0 && std::isfinite(t_end),
          "integrate_deviation: t_end must be non-negative");
  const double ratio = t_end / dt;
  const double steps = std::round(ratio);
  require(std::abs(ratio - steps) <= 1e-9 * std::max(1.0, ratio),
          "integrate_deviation: dt does not divide t_end");
  return static_cast<std::size_t>(steps);
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

}  // namespace

Vec3 closed_form_position(const GaussianPacket& p, const Vec3& x0, const Vec3& v0,
                          double t, SamplingMode mode) {
  p.validate();
  require_tt(p);
  const SymTensor3 psi = evaluate_packet(p, sample_z(mode, x0[2], v0[2], t), t);
  const Vec3 shift = apply_real(psi, x0);
  Vec3 out{};
  for (int j = 0; j < 3; ++j) out[j] = x0[j] + 0.5 * shift[j] + v0[j] * t;
  return out;
}

Vec3 closed_form_velocity(const GaussianPacket& p, const Vec3& x0, const Vec3& v0,
                          double t, SamplingMode mode) {
  p.validate();
  require_tt(p);
  const double z = sample_z(mode, x0[2], v0[2], t);
  Complex rate{0.0, -p.omega};
  if (mode == SamplingMode::Comoving) {
    const Complex dz_log{-p.k_prime * (z - p.z_center) / (2.0 * p.sigma), p.k_prime};
    rate += dz_log * v0[2];
  }
  const SymTensor3 dpsi = evaluate_packet(p, z, t) * rate;
  const Vec3 shift = apply_real(dpsi, x0);
  Vec3 out{};
  for (int j = 0; j < 3; ++j) out[j] = v0[j] + 0.5 * shift[j];
  return out;
}

Trajectory propagate(const GaussianPacket& p, const ParticleState& start,
                     double duration, std::size_t steps, double z_ref,
                     SamplingMode mode) {
  p.validate();
  require(steps >= 1, "propagate: need at least one step");
  const double h = duration / static_cast<double>(steps);
  const Vec3& xa = start.position;
  const Vec3& va = start.velocity;

  // Integrate the offset w from the straight line xa + va (t - ta); the
  // forcing is 1/2 Re(d^2 psi/dt^2) = -1/2 omega^2 Re(psi).
  const double gain = -0.5 * p.omega * p.omega;
  auto accel = [&](double elapsed, const Vec3& w) {
    const double z = sample_z(mode, z_ref, va[2], elapsed);
    const SymTensor3 psi = evaluate_packet(p, z, start.t + elapsed);
    const Vec3 x = axpy(axpy(xa, elapsed, va), 1.0, w);
    Vec3 a = apply_real(psi, x);
    for (double& c : a) c *= gain;
    return a;
  };

  Trajectory traj;
  traj.dt = h;
  traj.samples.reserve(steps + 1);
  traj.samples.push_back(start);

  Vec3 w{}, wd{};
  for (std::size_t k = 0; k < steps; ++k) {
    const double s = static_cast<double>(k) * h;
    const Vec3 k1w = wd;
    const Vec3 k1v = accel(s, w);
    const Vec3 k2w = axpy(wd, 0.5 * h, k1v);
    const Vec3 k2v = accel(s + 0.5 * h, axpy(w, 0.5 * h, k1w));
    const Vec3 k3w = axpy(wd, 0.5 * h, k2v);
    const Vec3 k3v = accel(s + 0.5 * h, axpy(w, 0.5 * h, k2w));
    const Vec3 k4w = axpy(wd, h, k3v);
    const Vec3 k4v = accel(s + h, axpy(w, h, k3w));
    for (int j = 0; j < 3; ++j) {
      w[j] += h / 6.0 * (k1w[j] + 2.0 * k2w[j] + 2.0 * k3w[j] + k4w[j]);
      wd[j] += h / 6.0 * (k1v[j] + 2.0 * k2v[j] + 2.0 * k3v[j] + k4v[j]);
    }
    const double elapsed = static_cast<double>(k + 1) * h;
    ParticleState st;
    st.t = start.t + elapsed;
    for (int j = 0; j < 3; ++j) {
      st.position[j] = xa[j] + va[j] * elapsed + w[j];
      st.velocity[j] = va[j] + wd[j];
    }
    traj.samples.push_back(st);
  }
  return traj;
}

Trajectory integrate_deviation(const GaussianPacket& p, const Vec3& x0,
                               const Vec3& v0, double t_end, double dt,
                               SamplingMode mode) {
  const std::size_t steps = checked_steps(t_end, dt);
  if (steps == 0) {
    p.validate();
    Trajectory traj;
    traj.dt = dt;
    traj.samples.push_back({x0, v0, 0.0});
    return traj;
  }
  Trajectory traj = propagate(p, {x0, v0, 0.0}, t_end, steps, x0[2], mode);
  traj.dt = dt;
  return traj;
}

double deviation_report(const GaussianPacket& p, const Vec3& x0, const Vec3& v0,
                        double t_end, double dt, SamplingMode mode) {
  const ParticleState seed{closed_form_position(p, x0, v0, 0.0, mode),
                           closed_form_velocity(p, x0, v0, 0.0, mode), 0.0};
  const std::size_t steps = checked_steps(t_end, dt);
  if (steps == 0) return 0.0;

  const Trajectory traj = propagate(p, seed, t_end, steps, x0[2], mode);
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    const Vec3 exact = closed_form_position(p, x0, v0, s.t, mode);
    worst = std::max(worst, norm(axpy(exact, -1.0, s.position)));
  }
  return worst;
}

}  // namespace metric_ripple
