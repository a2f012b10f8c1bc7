#pragma once

#include <numbers>

namespace metric_ripple {

/// SI physical constants (CODATA 2018).
struct PhysConst {
  double hbar;            // J s
  double h;               // J s
  double c;               // m / s
  double electron_mass;   // kg
  double electron_charge; // C

  /// All positive and h == 2 pi hbar to 1e-12 relative.
  bool valid() const;
};

inline constexpr PhysConst kCodata2018{
    .hbar = 6.62607015e-34 / (2.0 * std::numbers::pi),
    .h = 6.62607015e-34,
    .c = 299792458.0,
    .electron_mass = 9.1093837015e-31,
    .electron_charge = 1.602176634e-19,
};

}  // namespace metric_ripple
