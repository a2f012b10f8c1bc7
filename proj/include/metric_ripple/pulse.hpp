#pragma once

#include <cstddef>

#include "metric_ripple/constants.hpp"
#include "metric_ripple/tensor.hpp"

namespace metric_ripple {

/// Prefactor of the closed-form Gaussian integral.
enum class KernelConvention {
  Standard,  // sqrt(pi / alpha)
  Paper,     // 1 / (2 sqrt(pi alpha))
};

/// Free-particle transfer function H = a exp((i/hbar) integral of p^2/2m dt).
struct TransferParams {
  double a = 1.0;
  double mass = kCodata2018.electron_mass;  // kg
  double dt_interaction = 1e-18;            // s

  void validate() const;
  /// alpha = hbar dt / (2 m i), purely imaginary.
  Complex alpha() const;
};

/// Single delta pulse riding at x' = v t with carrier exp(i k' x - i omega t).
struct PulseInput {
  double v = 0.0;
  double k_prime = 1.0;
  double omega = 0.0;

  void validate() const;
};

/// -i hbar dt / (2 m).
Complex alpha_of(double mass, double dt, const PhysConst& constants = kCodata2018);

/// Closed form of integral exp(-alpha k^2) exp(i k u) dk over the real line,
/// principal-branch square root. Requires Re(alpha) >= 0 and alpha != 0; a
/// purely imaginary alpha is the Fresnel limit.
Complex gaussian_kernel_closed(Complex alpha, double u,
                               KernelConvention convention = KernelConvention::Standard);

/// Composite Simpson integral of exp(-(alpha + epsilon) k^2) exp(i k u) over
/// [-k_max, k_max] with n intervals (n >= 1000, rounded up to even).
/// k_max must satisfy exp(-(Re alpha + epsilon) k_max^2) < 1e-12.
Complex gaussian_kernel_quadrature(Complex alpha, double u, double epsilon,
                                   double k_max, std::size_t n);

struct QuadratureGrid {
  double k_max = 0.0;
  std::size_t n = 0;
};

/// Truncation and resolution that resolve the decay and the fastest
/// oscillation of the integrand.
QuadratureGrid suggest_grid(Complex alpha, double u, double epsilon);

/// a * kernel(alpha, x - v t) * exp(i k' x - i omega t).
Complex psi_out(double x, double t, const PulseInput& pulse,
                const TransferParams& params,
                KernelConvention convention = KernelConvention::Standard);

/// lambda = h / p.
double de_broglie_wavelength(double momentum, const PhysConst& constants = kCodata2018);
double momentum_of(double lambda, const PhysConst& constants = kCodata2018);

/// Electron wavelength after acceleration through `voltage` volts.
double electron_wavelength(double voltage, bool relativistic,
                           const PhysConst& constants = kCodata2018);

/// Inverse of electron_wavelength.
double accelerating_voltage_of(double lambda, bool relativistic,
                               const PhysConst& constants = kCodata2018);

}  // namespace metric_ripple
