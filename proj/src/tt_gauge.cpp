#include "metric_ripple/tt_gauge.hpp"

#include <algorithm>
#include <cmath>

#include "metric_ripple/error.hpp"

namespace metric_ripple {
namespace {

void require_unit(const Vec3& n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  require(std::abs(norm - 1.0) <= 1e-12, "propagation vector must have unit norm");
}

using Mat3 = std::array<std::array<Complex, 3>, 3>;

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

GaugeReport check_tt(const SymTensor3& a, const Vec3& propagation, double tol) {
  require_unit(propagation);
  GaugeReport r;
  // Spatial amplitude with u = (1, 0, 0, 0): A_mu alpha u^alpha = A_mu0 = 0.
  r.transversality_u = 0.0;
  for (int j = 0; j < 3; ++j) {
    Complex s = 0.0;
    for (int k = 0; k < 3; ++k) s += a(j, k) * propagation[k];
    r.transversality_k = std::max(r.transversality_k, std::abs(s));
  }
  r.trace = std::abs(a.trace());
  r.passed = r.transversality_u <= tol && r.transversality_k <= tol && r.trace <= tol;
  return r;
}

SymTensor3 tt_project(const SymTensor3& a, const Vec3& propagation) {
  require_unit(propagation);
  Mat3 p{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      p[j][k] = (j == k ? 1.0 : 0.0) - propagation[j] * propagation[k];

  const Mat3 pa = multiply(p, a.entries());
  const Mat3 pap = multiply(pa, p);
  const Complex tr = pa[0][0] + pa[1][1] + pa[2][2];

  SymTensor3 out;
  for (int j = 0; j < 3; ++j)
    for (int k = j; k < 3; ++k) {
      // Average the two halves so round-off cannot break exact symmetry.
      const Complex v = 0.5 * (pap[j][k] + pap[k][j]) - 0.5 * p[j][k] * tr;
      out.set(j, k, v);
    }
  return out;
}

SymTensor3 curvature_j0k0(const GaussianPacket& p, double z, double t) {
  return evaluate_packet(p, z, t) * (0.5 * p.omega * p.omega);
}

}  // namespace metric_ripple
