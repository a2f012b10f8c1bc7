#include "metric_ripple/interference.hpp"

#include <cmath>
#include <numbers>

#include "metric_ripple/error.hpp"

namespace metric_ripple {

TwoSlitSetup TwoSlitSetup::make(double d, double D, double lambda,
                                const SymTensor3& amplitude, double omega,
                                double z_center, double sigma) {
  TwoSlitSetup s;
  s.d = d;
  s.D = D;
  s.lambda = lambda;
  s.packet.amplitude = amplitude;
  s.packet.k_prime = 2.0 * std::numbers::pi / lambda;
  s.packet.omega = omega;
  s.packet.z_center = z_center;
  s.packet.sigma = sigma;
  s.validate();
  return s;
}

void TwoSlitSetup::validate() const {
  require(d > 0 && std::isfinite(d), "two-slit: d must be positive");
  require(D > 0 && std::isfinite(D), "two-slit: D must be positive");
  require(lambda > 0 && std::isfinite(lambda), "two-slit: lambda must be positive");
  packet.validate();
  const double k = 2.0 * std::numbers::pi / lambda;
  require(std::abs(packet.k_prime - k) <= 1e-12 * k,
          "two-slit: packet k_prime must equal 2 pi / lambda");
}

std::optional<std::string> TwoSlitSetup::far_field_warning() const {
  if (d / D > 0.01)
    return "d/D = " + std::to_string(d / D) + " exceeds 0.01; far-field path difference is approximate";
  return std::nullopt;
}

double path_difference(double x, const TwoSlitSetup& setup) {
  return x * setup.d / setup.D;
}

SymTensor3 slit_wave(const TwoSlitSetup& setup, Slit which, double z, double t,
                     double delta_z) {
  const double shifted = which == Slit::B ? z + delta_z : z;
  return evaluate_packet(setup.packet, shifted, t);
}

SymTensor3 superpose(std::span<const SymTensor3> fields) {
  require(!fields.empty(), "superpose: empty field list");
  SymTensor3 sum = fields.front();
  for (const auto& f : fields.subspan(1)) sum += f;
  return sum;
}

SymTensor3 pattern_closed_form(const TwoSlitSetup& setup, double z, double t, double x) {
  const GaussianPacket& p = setup.packet;
  const double dz = path_difference(x, setup);
  const Complex factor = 2.0 * envelope(p, z) *
                         std::polar(1.0, p.k_prime * (z + 0.5 * dz) - p.omega * t) *
                         std::cos(0.5 * p.k_prime * dz);
  return p.amplitude * factor;
}

double displacement_x(const TwoSlitSetup& setup, double y0, double x) {
  return displacement_x(setup, y0, x, setup.packet.z_center);
}

double displacement_x(const TwoSlitSetup& setup, double y0, double x, double z) {
  const GaussianPacket& p = setup.packet;
  require(p.amplitude(2, 0) == 0.0 && p.amplitude(2, 1) == 0.0 && p.amplitude(2, 2) == 0.0,
          "displacement_x: requires A_31 = A_32 = A_33 = 0", ErrorCode::Precondition);
  const double a_prime = 2.0 * std::abs(p.amplitude(0, 1)) * envelope(p, z);
  return 0.5 * y0 * a_prime * std::cos(0.5 * p.k_prime * path_difference(x, setup));
}

std::vector<ScreenSample> screen_profile(const TwoSlitSetup& setup, double x_min,
                                         double x_max, std::size_t n, double y0) {
  require(n >= 2, "screen_profile: need at least two samples");
  require(x_min < x_max, "screen_profile: x_min must be below x_max");
  setup.validate();
  std::vector<ScreenSample> out(n);
  const double span = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    // Weighted form keeps symmetric ranges exactly mirrored.
    const double w = static_cast<double>(i);
    const double x = ((span - w) * x_min + w * x_max) / span;
    ScreenSample& s = out[i];
    s.x = x;
    s.delta_z = path_difference(x, setup);
    s.psi = pattern_closed_form(setup, setup.packet.z_center, 0.0, x);
    s.displacement = displacement_x(setup, y0, x);
  }
  return out;
}

}  // namespace metric_ripple
