#include "metric_ripple/metric_core.hpp"

#include <cmath>

#include "metric_ripple/constants.hpp"
#include "metric_ripple/error.hpp"

namespace metric_ripple {

bool PhysConst::valid() const {
  if (!(hbar > 0 && h > 0 && c > 0 && electron_mass > 0 && electron_charge > 0))
    return false;
  return std::abs(h - 2.0 * std::numbers::pi * hbar) <= 1e-12 * h;
}

void GaussianPacket::validate() const {
  require(k_prime > 0 && std::isfinite(k_prime), "packet: k_prime must be positive");
  require(sigma > 0, "packet: sigma must be positive");
  require(omega >= 0 && std::isfinite(omega), "packet: omega must be non-negative");
  require(std::isfinite(z_center), "packet: z_center must be finite");
  require(amplitude.is_real(), "packet: amplitude entries must be real");
}

double envelope(const GaussianPacket& p, double z) {
  const double dz = z - p.z_center;
  return std::exp(-p.k_prime * dz * dz / (4.0 * p.sigma));
}

double envelope_half_width(const GaussianPacket& p) {
  return 2.0 * std::sqrt(p.sigma / p.k_prime);
}

Complex packet_factor(const GaussianPacket& p, double z, double t) {
  return envelope(p, z) * std::polar(1.0, p.k_prime * z - p.omega * t);
}

SymTensor3 evaluate_packet(const GaussianPacket& p, double z, double t) {
  return p.amplitude * packet_factor(p, z, t);
}

Metric4 perturbed_metric(const Metric4& eta, const SymTensor3& psi) {
  require(psi.max_abs() < 1.0,
          "perturbed_metric: |psi| >= 1 is outside the perturbative regime",
          ErrorCode::Precondition);
  Metric4 g = eta;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) g.g[j + 1][k + 1] += psi(j, k).real();
  return g;
}

}  // namespace metric_ripple
