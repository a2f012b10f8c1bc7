#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "metric_ripple/error.hpp"
#include "metric_ripple/geodesic.hpp"
#include "oracles.hpp"

using namespace metric_ripple;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOmega = 2.0 * kPi * 1e3;
constexpr double kPeriod = 2.0 * kPi / kOmega;

GaussianPacket table_scale_packet(double a12) {
  GaussianPacket p;
  p.amplitude.set(0, 1, a12);
  p.k_prime = 2.0 * kPi / 5e-11;
  p.omega = kOmega;
  p.z_center = 0.0;
  p.sigma = 1e-5;
  return p;
}

double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

}  // namespace

TEST(ClosedForm, FlatSpaceIsStraightLine) {
  const GaussianPacket p = table_scale_packet(0.0);
  const Vec3 x0{1e-6, -2e-6, 3e-6}, v0{10.0, -4.0, 2.5};
  for (double t : {0.0, 1e-5, 3.3e-4}) {
    const Vec3 x = closed_form_position(p, x0, v0, t);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(x[j], x0[j] + v0[j] * t);
  }
}

TEST(ClosedForm, StaticPlusPolarisation) {
  const double h0 = 1e-6;
  GaussianPacket p;
  p.amplitude = SymTensor3::diagonal(h0, -h0, 0.0);
  p.k_prime = 1.0;
  p.omega = 0.0;
  p.sigma = 1.0;
  const Vec3 x = closed_form_position(p, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 5.0);
  EXPECT_DOUBLE_EQ(x[0], 1.0 + h0 / 2.0);
  EXPECT_EQ(x[1], 0.0);
  EXPECT_EQ(x[2], 0.0);
}

TEST(ClosedForm, CrossComponentMatchesMatrixVectorOracle) {
  const GaussianPacket p = table_scale_packet(1e-6);
  const double y0 = 6e-6;
  for (double t : {0.0, 0.2 * kPeriod, 0.61 * kPeriod}) {
    const Vec3 x = closed_form_position(p, {0.0, y0, 0.0}, {0.0, 0.0, 0.0}, t);
    // Re psi_12 at z = 0 is 1e-6 cos(omega t).
    const double re_psi12 = 1e-6 * std::cos(-kOmega * t);
    EXPECT_NEAR(x[0], 0.5 * y0 * re_psi12, 1e-27);
    EXPECT_EQ(x[1], y0);
  }
}

TEST(ClosedForm, RequiresTransverseTracelessAmplitude) {
  GaussianPacket p = table_scale_packet(1e-6);
  p.amplitude.set(2, 2, 1e-6);
  try {
    closed_form_position(p, {0, 1, 0}, {0, 0, 0}, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}

TEST(ClosedForm, ComovingModeSamplesMovingPoint) {
  const GaussianPacket p = table_scale_packet(1e-6);
  const Vec3 x0{0.0, 6e-6, 0.0}, v0{0.0, 0.0, 1e-6};
  const double t = 3e-3;
  const Vec3 x = closed_form_position(p, x0, v0, t, SamplingMode::Comoving);
  const double z = v0[2] * t;
  const double re_psi12 = 1e-6 * oracle::gaussian_envelope(p.k_prime, z, p.sigma) *
                          std::cos(p.k_prime * z - kOmega * t);
  EXPECT_NEAR(x[0], 0.5 * 6e-6 * re_psi12, 1e-25);
  EXPECT_DOUBLE_EQ(x[2], z);
}

TEST(ClosedForm, VelocityMatchesFiniteDifference) {
  const GaussianPacket p = table_scale_packet(1e-3);
  const Vec3 x0{2e-6, 6e-6, 0.0}, v0{1.0, 0.0, 0.0};
  const double t = 0.3 * kPeriod, h = 1e-5 * kPeriod;
  const Vec3 v = closed_form_velocity(p, x0, v0, t);
  const Vec3 a = closed_form_position(p, x0, v0, t + h);
  const Vec3 b = closed_form_position(p, x0, v0, t - h);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(v[j], (a[j] - b[j]) / (2 * h), 1e-9);
}

TEST(Integrator, FlatSpaceIsExactAtEveryStep) {
  const GaussianPacket p = table_scale_packet(0.0);
  const Vec3 x0{1e-6, 6e-6, -2e-6}, v0{3.0, -7.0, 0.5};
  for (double dt : {kPeriod / 7.0, kPeriod / 100.0}) {
    const Trajectory traj = integrate_deviation(p, x0, v0, kPeriod, dt);
    for (const auto& s : traj.samples)
      for (int j = 0; j < 3; ++j) {
        EXPECT_EQ(s.position[j], x0[j] + v0[j] * s.t);
        EXPECT_EQ(s.velocity[j], v0[j]);
      }
  }
}

TEST(Integrator, SampleLayout) {
  const GaussianPacket p = table_scale_packet(1e-6);
  const Vec3 x0{0.0, 6e-6, 0.0}, v0{0.0, 0.0, 0.0};
  const Trajectory traj = integrate_deviation(p, x0, v0, kPeriod, kPeriod / 250.0);
  ASSERT_EQ(traj.samples.size(), 251u);
  EXPECT_EQ(traj.samples.front().position, x0);
  EXPECT_EQ(traj.samples.front().velocity, v0);
  EXPECT_EQ(traj.samples.front().t, 0.0);
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const double step = traj.samples[i].t - traj.samples[i - 1].t;
    EXPECT_GT(step, 0.0);
    EXPECT_NEAR(step, traj.dt, 1e-12 * traj.dt);
  }
}

TEST(Integrator, RejectsBadSteps) {
  const GaussianPacket p = table_scale_packet(1e-6);
  const Vec3 x0{0.0, 6e-6, 0.0}, v0{};
  EXPECT_THROW(integrate_deviation(p, x0, v0, 1.0, 0.0), Error);
  EXPECT_THROW(integrate_deviation(p, x0, v0, 1.0, -0.1), Error);
  EXPECT_THROW(integrate_deviation(p, x0, v0, 1.0, 0.3), Error);
  EXPECT_THROW(integrate_deviation(p, x0, v0, -1.0, 0.1), Error);
  EXPECT_NO_THROW(integrate_deviation(p, x0, v0, 1.0, 0.1));
}

TEST(Integrator, FourthOrderConvergence) {
  // Large amplitude and coarse steps so truncation error dominates round-off.
  const GaussianPacket p = table_scale_packet(1e-2);
  const Vec3 x0{0.0, 1.0, 0.0}, v0{};
  auto end_x = [&](std::size_t steps) {
    return integrate_deviation(p, x0, v0, kPeriod, kPeriod / static_cast<double>(steps))
        .samples.back()
        .position;
  };
  const Vec3 reference = end_x(4096);
  const double e1 = distance(end_x(16), reference);
  const double e2 = distance(end_x(32), reference);
  const double ratio = e1 / e2;
  EXPECT_GT(ratio, 13.0);
  EXPECT_LT(ratio, 19.0);
}

TEST(Integrator, TimeReversal) {
  const GaussianPacket p = table_scale_packet(1e-3);
  const ParticleState start{{0.0, 6e-6, 0.0}, {0.0, 0.0, 0.0}, 0.0};
  const std::size_t steps = 200;
  const Trajectory fwd = propagate(p, start, kPeriod, steps, 0.0);
  const Trajectory fine = propagate(p, start, kPeriod, 2 * steps, 0.0);
  const double step_error =
      distance(fwd.samples.back().position, fine.samples.back().position);
  const Trajectory back = propagate(p, fwd.samples.back(), -kPeriod, steps, 0.0);
  const double returned = distance(back.samples.back().position, start.position);
  EXPECT_NEAR(back.samples.back().t, 0.0, 1e-15);
  EXPECT_LE(returned, 10.0 * step_error + 1e-20);
}

TEST(DeviationReport, ZeroAmplitudeIsZero) {
  EXPECT_EQ(deviation_report(table_scale_packet(0.0), {0.0, 6e-6, 0.0}, {1.0, 0.0, 0.0},
                             kPeriod, kPeriod / 100.0),
            0.0);
}

TEST(DeviationReport, FirstOrderAgreementAndQuadraticScaling) {
  const Vec3 x0{0.0, 6e-6, 0.0}, v0{};
  const std::array<double, 3> amps{1e-7, 1e-6, 1e-5};
  std::array<double, 3> errs{};
  for (std::size_t i = 0; i < amps.size(); ++i)
    errs[i] = deviation_report(table_scale_packet(amps[i]), x0, v0, kPeriod, kPeriod / 1000.0);
  EXPECT_LE(errs[1] / 6e-6, 1e-10);
  const double growth = errs[2] / errs[1];
  EXPECT_GT(growth, 80.0);
  EXPECT_LT(growth, 120.0);
  const double slope = oracle::loglog_slope(amps, errs);
  EXPECT_GE(slope, 1.8);
  EXPECT_LE(slope, 2.2);
}
