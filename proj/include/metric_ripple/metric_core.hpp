#pragma once

#include "metric_ripple/tensor.hpp"

namespace metric_ripple {

/// Gaussian-modulated plane-wave metric perturbation travelling along +z:
///
///   psi_jk(z, t) = A_jk exp(-k' (z - z')^2 / (4 sigma)) exp(i (k' z - omega t))
///
/// sigma is a length; sigma = +inf switches the envelope off.
struct GaussianPacket {
  SymTensor3 amplitude;  // real entries
  double k_prime = 1.0;  // 1/m
  double omega = 0.0;    // rad/s
  double z_center = 0.0; // m
  double sigma = 1.0;    // m

  /// Throws Error when k' <= 0, sigma <= 0, omega < 0 or the amplitude is complex.
  void validate() const;
};

/// exp(-k' (z - z')^2 / (4 sigma)); 1 when sigma is infinite.
double envelope(const GaussianPacket& p, double z);

/// 1/e half-width of the envelope, 2 sqrt(sigma / k').
double envelope_half_width(const GaussianPacket& p);

/// Complex scalar envelope * carrier multiplying the amplitude tensor.
Complex packet_factor(const GaussianPacket& p, double z, double t);

SymTensor3 evaluate_packet(const GaussianPacket& p, double z, double t);

/// g = eta + Re(psi) on the spatial block. Rejects any |psi_jk| >= 1.
Metric4 perturbed_metric(const Metric4& eta, const SymTensor3& psi);

}  // namespace metric_ripple
