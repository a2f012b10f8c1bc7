#pragma once

#include "metric_ripple/metric_core.hpp"
#include "metric_ripple/tensor.hpp"

namespace metric_ripple {

/// Spacetime 4-vector (t, x, y, z), c = 1.
struct FourVector {
  double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

  /// Proper-frame observer: contravariant (1, 0, 0, 0), i.e. u_0 = -1.
  static FourVector proper_observer() { return {1.0, 0.0, 0.0, 0.0}; }
};

struct GaugeReport {
  double transversality_u = 0.0;  // max_mu |A_mu alpha u^alpha|
  double transversality_k = 0.0;  // max_j |A_jk n^k|
  double trace = 0.0;             // |A^mu_mu|
  bool passed = false;
};

/// Residuals of the transverse-traceless conditions for a purely spatial
/// amplitude propagating along `propagation` (unit norm within 1e-12).
GaugeReport check_tt(const SymTensor3& a, const Vec3& propagation, double tol);

/// A^TT = P A P - 1/2 P tr(P A) with P = I - n n^T.
SymTensor3 tt_project(const SymTensor3& a, const Vec3& propagation);

/// R_j0k0 = -1/2 d^2 psi_jk / dt^2 = 1/2 omega^2 psi_jk for the packet carrier.
SymTensor3 curvature_j0k0(const GaussianPacket& p, double z, double t);

}  // namespace metric_ripple
