#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metric_ripple/metric_core.hpp"

namespace metric_ripple {

/// Two-slit geometry plus the packet emitted from each slit.
struct TwoSlitSetup {
  double d = 0.5e-6;       // slit separation, m
  double D = 0.35;         // slit to screen, m
  double lambda = 5e-11;   // m
  GaussianPacket packet;   // k_prime == 2 pi / lambda

  /// Builds a setup whose packet wavenumber is 2 pi / lambda.
  static TwoSlitSetup make(double d, double D, double lambda,
                           const SymTensor3& amplitude, double omega,
                           double z_center, double sigma);

  void validate() const;

  /// Non-empty when d / D > 0.01 (far-field approximation is poor).
  std::optional<std::string> far_field_warning() const;
};

enum class Slit { A, B };

struct ScreenSample {
  double x = 0.0;
  double delta_z = 0.0;
  SymTensor3 psi;
  double displacement = 0.0;
};

/// Delta z = x d / D.
double path_difference(double x, const TwoSlitSetup& setup);

/// Wave from one slit. Slit B is slit A shifted by `delta_z` in both envelope
/// and carrier: z -> z + delta_z.
SymTensor3 slit_wave(const TwoSlitSetup& setup, Slit which, double z, double t,
                     double delta_z);

/// Elementwise sum; throws on an empty list.
SymTensor3 superpose(std::span<const SymTensor3> fields);

/// Merged closed form
///   2 A exp(-k'(z - z')^2 / 4 sigma) exp(i k'(z + dz/2) - i omega t) cos(k' dz / 2)
/// with dz = path_difference(x).
SymTensor3 pattern_closed_form(const TwoSlitSetup& setup, double z, double t, double x);

/// Transverse displacement amplitude at screen coordinate x for a particle
/// starting at y0: 1/2 y0 |A'_12| cos(k' dz / 2), |A'_12| = 2 |A_12| envelope(z).
/// Requires A_31 = A_32 = A_33 = 0.
double displacement_x(const TwoSlitSetup& setup, double y0, double x);
double displacement_x(const TwoSlitSetup& setup, double y0, double x, double z);

/// n >= 2 uniformly spaced samples over [x_min, x_max].
std::vector<ScreenSample> screen_profile(const TwoSlitSetup& setup, double x_min,
                                         double x_max, std::size_t n, double y0);

}  // namespace metric_ripple
