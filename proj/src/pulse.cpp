#include "metric_ripple/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "metric_ripple/error.hpp"

namespace metric_ripple {
namespace {

constexpr double kPi = std::numbers::pi;
// exp(-kDecayExponent) = 1e-13, inside the 1e-12 truncation requirement.
const double kDecayExponent = 13.0 * std::log(10.0);
constexpr double kRadiansPerStep = 0.05;
constexpr std::size_t kMinIntervals = 1000;
constexpr std::size_t kMaxIntervals = 200'000'000;

}  // namespace

void TransferParams::validate() const {
  require(std::isfinite(a), "transfer: a must be finite");
  require(mass > 0 && std::isfinite(mass), "transfer: mass must be positive");
  require(dt_interaction > 0 && std::isfinite(dt_interaction),
          "transfer: interaction time must be positive");
}

Complex TransferParams::alpha() const {
  validate();
  return alpha_of(mass, dt_interaction);
}

void PulseInput::validate() const {
  require(std::isfinite(v) && std::isfinite(omega), "pulse: v and omega must be finite");
  require(k_prime > 0 && std::isfinite(k_prime), "pulse: k_prime must be positive");
}

Complex alpha_of(double mass, double dt, const PhysConst& constants) {
  require(mass > 0, "alpha_of: mass must be positive");
  require(dt > 0, "alpha_of: dt must be positive");
  return {0.0, -constants.hbar * dt / (2.0 * mass)};
}

Complex gaussian_kernel_closed(Complex alpha, double u, KernelConvention convention) {
  require(alpha != 0.0, "gaussian_kernel: alpha must be non-zero");
  require(alpha.real() >= 0.0, "gaussian_kernel: Re(alpha) < 0 diverges",
          ErrorCode::Precondition);
  const Complex shape = std::exp(-u * u / (4.0 * alpha));
  if (convention == KernelConvention::Paper)
    return shape / (2.0 * std::sqrt(kPi * alpha));
  return std::sqrt(kPi / alpha) * shape;
}

Complex gaussian_kernel_quadrature(Complex alpha, double u, double epsilon,
                                   double k_max, std::size_t n) {
  require(epsilon > 0, "quadrature: epsilon must be positive");
  require(alpha.real() >= 0.0, "quadrature: Re(alpha) must be non-negative",
          ErrorCode::Precondition);
  require(n >= kMinIntervals, "quadrature: need at least 1000 intervals");
  require(k_max > 0 && std::exp(-(alpha.real() + epsilon) * k_max * k_max) < 1e-12,
          "quadrature: k_max too small for the integrand to decay below 1e-12");
  if (n % 2 == 1) ++n;

  const Complex a = alpha + epsilon;
  const double h = 2.0 * k_max / static_cast<double>(n);
  auto f = [&](double k) { return std::exp(Complex{0.0, k * u} - a * k * k); };

  // Simpson weights 1,4,2,...,4,1; fixed summation order for bit-stable output.
  Complex odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double k = -k_max + static_cast<double>(i) * h;
    (i % 2 == 1 ? odd : even) += f(k);
  }
  return h / 3.0 * (f(-k_max) + 4.0 * odd + 2.0 * even + f(k_max));
}

QuadratureGrid suggest_grid(Complex alpha, double u, double epsilon) {
  const double decay = alpha.real() + epsilon;
  require(decay > 0, "suggest_grid: Re(alpha) + epsilon must be positive");
  QuadratureGrid grid;
  grid.k_max = std::sqrt(kDecayExponent / decay);
  // Largest |d/dk| of the exponent -alpha k^2 + i u k on the interval.
  const double rate = 2.0 * std::abs(alpha + epsilon) * grid.k_max + std::abs(u);
  const double intervals = std::ceil(2.0 * grid.k_max * rate / kRadiansPerStep);
  grid.n = std::clamp(static_cast<std::size_t>(intervals), kMinIntervals, kMaxIntervals);
  if (grid.n % 2 == 1) ++grid.n;
  return grid;
}

Complex psi_out(double x, double t, const PulseInput& pulse,
                const TransferParams& params, KernelConvention convention) {
  pulse.validate();
  const Complex kernel = gaussian_kernel_closed(params.alpha(), x - pulse.v * t, convention);
  return params.a * kernel * std::polar(1.0, pulse.k_prime * x - pulse.omega * t);
}

double de_broglie_wavelength(double momentum, const PhysConst& constants) {
  require(momentum > 0, "de_broglie_wavelength: momentum must be positive");
  return constants.h / momentum;
}

double momentum_of(double lambda, const PhysConst& constants) {
  require(lambda > 0, "momentum_of: wavelength must be positive");
  return constants.h / lambda;
}

double electron_wavelength(double voltage, bool relativistic, const PhysConst& constants) {
  require(voltage > 0, "electron_wavelength: voltage must be positive");
  const double m = constants.electron_mass;
  const double energy = constants.electron_charge * voltage;
  double p2 = 2.0 * m * energy;
  if (relativistic) p2 *= 1.0 + energy / (2.0 * m * constants.c * constants.c);
  return de_broglie_wavelength(std::sqrt(p2), constants);
}

double accelerating_voltage_of(double lambda, bool relativistic, const PhysConst& constants) {
  const double p = momentum_of(lambda, constants);
  const double m = constants.electron_mass;
  double energy;
  if (relativistic) {
    // Kinetic energy sqrt(p^2 c^2 + m^2 c^4) - m c^2, written to avoid cancellation.
    const double mc2 = m * constants.c * constants.c;
    const double pc = p * constants.c;
    energy = pc * pc / (std::sqrt(pc * pc + mc2 * mc2) + mc2);
  } else {
    energy = p * p / (2.0 * m);
  }
  return energy / constants.electron_charge;
}

}  // namespace metric_ripple
