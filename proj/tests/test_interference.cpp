#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "metric_ripple/error.hpp"
#include "metric_ripple/fringe.hpp"
#include "metric_ripple/interference.hpp"

using namespace metric_ripple;

namespace {

constexpr double kPi = std::numbers::pi;
const double kA12 = std::sqrt(6e-6);

TwoSlitSetup table_setup(double sigma = 1e-5) {
  SymTensor3 a;
  a.set(0, 1, kA12);
  return TwoSlitSetup::make(0.5e-6, 0.35, 5e-11, a, 2.0 * kPi * 1e3, 0.0, sigma);
}

double rel_diff(const SymTensor3& a, const SymTensor3& b) {
  return max_abs_diff(a, b) / std::max(a.max_abs(), b.max_abs());
}

}  // namespace

TEST(TwoSlitSetup, ValidatesGeometry) {
  SymTensor3 a;
  a.set(0, 1, 1e-6);
  EXPECT_THROW(TwoSlitSetup::make(-1.0, 0.35, 5e-11, a, 0, 0, 1), Error);
  EXPECT_THROW(TwoSlitSetup::make(0.5e-6, 0.0, 5e-11, a, 0, 0, 1), Error);
  EXPECT_THROW(TwoSlitSetup::make(0.5e-6, 0.35, 0.0, a, 0, 0, 1), Error);
  TwoSlitSetup s = table_setup();
  s.packet.k_prime *= 1.0 + 1e-9;
  EXPECT_THROW(s.validate(), Error);
}

TEST(TwoSlitSetup, FarFieldWarning) {
  EXPECT_FALSE(table_setup().far_field_warning().has_value());
  TwoSlitSetup s = table_setup();
  s.d = 0.01;
  EXPECT_TRUE(s.far_field_warning().has_value());
}

TEST(PathDifference, Arithmetic) {
  const TwoSlitSetup s = table_setup();
  EXPECT_EQ(path_difference(0.0, s), 0.0);
  EXPECT_NEAR(path_difference(4.30e-6, s), 6.142857142857143e-12, 1e-27);
  EXPECT_EQ(path_difference(-4.30e-6, s), -path_difference(4.30e-6, s));
  // Exactly linear.
  EXPECT_NEAR(path_difference(3e-6, s), 3.0 * path_difference(1e-6, s), 1e-28);
}

TEST(SlitWave, CoincidentSlitsAreIdentical) {
  const TwoSlitSetup s = table_setup();
  EXPECT_EQ(slit_wave(s, Slit::A, 1e-9, 2e-4, 0.0), slit_wave(s, Slit::B, 1e-9, 2e-4, 0.0));
}

TEST(SlitWave, CenterCarrierPhase) {
  TwoSlitSetup s = table_setup();
  s.packet.z_center = 3.3e-10;
  const SymTensor3 w = slit_wave(s, Slit::A, s.packet.z_center, 0.0, 0.0);
  const Complex expected = kA12 * std::polar(1.0, s.packet.k_prime * s.packet.z_center);
  EXPECT_NEAR(std::abs(w(0, 1) - expected), 0.0, 1e-15 * kA12);
}

TEST(SlitWave, CarrierOnlyShiftIsPhaseFactor) {
  const TwoSlitSetup s = table_setup(INFINITY);
  const double dz = 1.7e-12, z = 4e-10, t = 1e-4;
  const Complex a = slit_wave(s, Slit::A, z, t, dz)(0, 1);
  const Complex b = slit_wave(s, Slit::B, z, t, dz)(0, 1);
  const Complex expected = a * std::polar(1.0, s.packet.k_prime * dz);
  EXPECT_LE(std::abs(b - expected), 1e-11 * std::abs(a));
}

TEST(Superpose, CancellationAndDoubling) {
  const TwoSlitSetup s = table_setup();
  const SymTensor3 psi = slit_wave(s, Slit::A, 2e-10, 1e-4, 0.0);
  const std::vector<SymTensor3> cancel{psi, psi * -1.0};
  EXPECT_EQ(superpose(cancel).max_abs(), 0.0);
  const std::vector<SymTensor3> same{psi, slit_wave(s, Slit::B, 2e-10, 1e-4, 0.0)};
  EXPECT_EQ(superpose(same), psi * 2.0);
  const std::vector<SymTensor3> single{psi};
  EXPECT_EQ(superpose(single), psi);
  EXPECT_THROW(superpose(std::vector<SymTensor3>{}), Error);
}

TEST(Superpose, CommutativeAndLinear) {
  const TwoSlitSetup s = table_setup();
  const SymTensor3 a = slit_wave(s, Slit::A, 1e-10, 0.0, 0.0);
  const SymTensor3 b = slit_wave(s, Slit::B, 1e-10, 0.0, 3e-12);
  const std::vector<SymTensor3> ab{a, b}, ba{b, a};
  EXPECT_EQ(superpose(ab), superpose(ba));
  const std::vector<SymTensor3> scaled{a * 3.0, b * 3.0};
  EXPECT_LE(rel_diff(superpose(scaled), superpose(ab) * 3.0), 1e-15);
}

TEST(Superpose, HalfWavelengthShiftCancels) {
  const TwoSlitSetup s = table_setup(INFINITY);
  const double dz = kPi / s.packet.k_prime;
  for (double z : {0.0, 1e-11, 7e-10}) {
    const std::vector<SymTensor3> pair{slit_wave(s, Slit::A, z, 0.0, dz),
                                       slit_wave(s, Slit::B, z, 0.0, dz)};
    EXPECT_LE(superpose(pair).max_abs(), 1e-14 * kA12);
  }
}

TEST(PatternClosedForm, AxialPointDoublesSingleWave) {
  const TwoSlitSetup s = table_setup();
  const SymTensor3 pattern = pattern_closed_form(s, 1e-10, 3e-4, 0.0);
  EXPECT_LE(rel_diff(pattern, evaluate_packet(s.packet, 1e-10, 3e-4) * 2.0), 1e-15);
}

TEST(PatternClosedForm, EqualsDirectSumWithoutEnvelope) {
  const TwoSlitSetup s = table_setup(INFINITY);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uz(-1e-10, 1e-10), ut(0.0, 1e-3), ux(-2e-5, 2e-5);
  for (int i = 0; i < 1000; ++i) {
    const double z = uz(rng), t = ut(rng), x = ux(rng);
    const double dz = path_difference(x, s);
    const std::vector<SymTensor3> pair{slit_wave(s, Slit::A, z, t, dz),
                                       slit_wave(s, Slit::B, z, t, dz)};
    const SymTensor3 direct = superpose(pair);
    const SymTensor3 closed = pattern_closed_form(s, z, t, x);
    EXPECT_LE(max_abs_diff(direct, closed), 1e-14 * 2.0 * kA12) << i;
  }
}

TEST(PatternClosedForm, EnvelopeShiftErrorIsBounded) {
  // With envelopes on, the merged form neglects the B envelope shift; the
  // relative error stays within O(k' dz |z - z'| / sigma + k' dz^2 / sigma).
  const TwoSlitSetup s = table_setup(1e-5);
  const double k = s.packet.k_prime, sigma = s.packet.sigma;
  for (double x : {1e-6, 5e-6, 2e-5}) {
    const double dz = path_difference(x, s);
    for (double z : {0.0, 2e-9, -5e-9}) {
      const std::vector<SymTensor3> pair{slit_wave(s, Slit::A, z, 0.0, dz),
                                         slit_wave(s, Slit::B, z, 0.0, dz)};
      const SymTensor3 direct = superpose(pair);
      const SymTensor3 closed = pattern_closed_form(s, z, 0.0, x);
      const double bound = k * dz * (std::abs(z) + dz) / (2.0 * sigma);
      EXPECT_LE(max_abs_diff(direct, closed), 2.0 * kA12 * bound + 1e-14 * kA12)
          << "x=" << x << " z=" << z;
    }
  }
}

TEST(DisplacementX, OnAxisIsAmplitudeSquared) {
  const TwoSlitSetup s = table_setup();
  EXPECT_NEAR(displacement_x(s, kA12, 0.0), 6e-6, 1e-20);
}

TEST(DisplacementX, DarkFringe) {
  const TwoSlitSetup s = table_setup();
  // k' x d / (2 D) = pi / 2
  const double x = kPi * s.D / (s.packet.k_prime * s.d);
  EXPECT_NEAR(displacement_x(s, kA12, x), 0.0, 1e-20);
}

TEST(DisplacementX, TableGeometryValue) {
  const TwoSlitSetup s = table_setup();
  const double x = 4.30e-6;
  // mpmath: 6e-6 cos(c x / 2), c = (2 pi / 5e-11)(0.5e-6 / 0.35)
  EXPECT_NEAR(displacement_x(s, kA12, x), 5.558608782257325e-6, 1e-17);
  // The fringe map at the same point carries the full argument c x.
  const FringeMap m = fringe_map_from(6e-6, 5e-11, 0.5e-6, 0.35);
  EXPECT_NEAR(m(x), 4.299377198062753e-6, 1e-17);
}

TEST(DisplacementX, EvenAndBounded) {
  const TwoSlitSetup s = table_setup();
  for (double x = 0.0; x < 1e-4; x += 3.1e-7) {
    const double d = displacement_x(s, kA12, x);
    EXPECT_EQ(d, displacement_x(s, kA12, -x));
    EXPECT_LE(std::abs(d), kA12 * kA12 * (1.0 + 1e-15));
  }
}

TEST(DisplacementX, RequiresPlanarPolarisation) {
  TwoSlitSetup s = table_setup();
  s.packet.amplitude.set(2, 0, 1e-6);
  EXPECT_THROW(displacement_x(s, kA12, 0.0), Error);
}

TEST(ScreenProfile, ValidatesRange) {
  const TwoSlitSetup s = table_setup();
  EXPECT_THROW(screen_profile(s, 0.0, 1.0, 1, kA12), Error);
  EXPECT_THROW(screen_profile(s, 1.0, 0.0, 10, kA12), Error);
}

TEST(ScreenProfile, SymmetricRangeIsEven) {
  const TwoSlitSetup s = table_setup();
  const auto profile = screen_profile(s, -2e-5, 2e-5, 401, kA12);
  ASSERT_EQ(profile.size(), 401u);
  EXPECT_EQ(profile[200].x, 0.0);
  EXPECT_NEAR(profile[200].displacement, 6e-6, 1e-20);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& a = profile[i];
    const auto& b = profile[profile.size() - 1 - i];
    EXPECT_EQ(a.x, -b.x);
    EXPECT_EQ(a.displacement, b.displacement);
    EXPECT_NEAR(a.delta_z, a.x * s.d / s.D, 1e-15 * std::abs(a.delta_z));
  }
}

TEST(ScreenProfile, FringeSpacingIsLambdaDOverD) {
  const TwoSlitSetup s = table_setup();
  // |cos(k' x d / 2D)| peaks every lambda D / d = 3.5e-5 m. Sample the range
  // [-2e-5, 6e-5] finely and locate the two peaks at 0 and 3.5e-5.
  const auto profile = screen_profile(s, -2e-5, 6e-5, 8001, kA12);
  std::vector<double> maxima;
  for (std::size_t i = 1; i + 1 < profile.size(); ++i)
    if (std::abs(profile[i].displacement) > std::abs(profile[i - 1].displacement) &&
        std::abs(profile[i].displacement) >= std::abs(profile[i + 1].displacement))
      maxima.push_back(profile[i].x);
  ASSERT_EQ(maxima.size(), 2u);
  EXPECT_NEAR(maxima[1] - maxima[0], 3.5e-5, 2e-8);
}

TEST(ScreenProfile, ZerosAtCosineRoots) {
  const TwoSlitSetup s = table_setup();
  for (int m = 0; m < 3; ++m) {
    const double x = (kPi / 2 + m * kPi) * 2.0 * s.D / (s.packet.k_prime * s.d);
    EXPECT_NEAR(displacement_x(s, kA12, x), 0.0, 1e-19);
  }
}
