#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

namespace metric_ripple {

/// Fringe displacement recurrence x_{n+1} = a2 cos(c x_n).
struct FringeMap {
  double a2 = 0.0;  // displacement scale A_12^2, m
  double c = 0.0;   // gain k' d / D, 1/m

  double operator()(double x) const;
  /// f'(x) = -a2 c sin(c x).
  double derivative(double x) const;
  void validate() const;
};

/// Map parameters derived from a two-slit geometry: c = (2 pi / lambda) (d / D).
FringeMap fringe_map_from(double a2, double lambda, double d, double D,
                          double pi = std::numbers::pi);

struct TableOptions {
  /// Use the slit separation printed in the data table (0.5e-11 m) instead of
  /// the 0.5 um stated for the experiment.
  bool literal_d = false;
  /// Use the full-precision pi in c = 2 pi d / (lambda D). The tabulated
  /// iterates were produced with pi = 3.14; exact pi shifts rows 3, 4 and 6
  /// by up to 6.5e-9 m.
  bool exact_pi = false;
};

inline constexpr double kTableA2 = 6e-6;
inline constexpr double kTableLambda = 5e-11;
inline constexpr double kTableD = 0.35;
inline constexpr double kTableSlitSeparation = 0.5e-6;
inline constexpr double kTableLiteralSlitSeparation = 0.5e-11;
inline constexpr double kTableStart = 5.41e-6;
inline constexpr double kTablePi = 3.14;

/// a2 = 6e-6 m, lambda = 5e-11 m, D = 0.35 m, d = 0.5e-6 m (or the literal
/// 0.5e-11 m with TableOptions::literal_d), c = 2 pi d / (lambda D) with
/// pi = 3.14 unless TableOptions::exact_pi.
FringeMap table1_map(TableOptions options = {});

struct IterationTrace {
  std::vector<double> iterates;
  bool converged = false;
  std::optional<double> fixed_point;
  double residual = 0.0;  // |x* - f(x*)|, or of the last iterate
  bool repelling = false; // |f'| >= 1 at the candidate point
};

/// n steps from x0; iterates has n + 1 entries.
IterationTrace iterate(const FringeMap& map, double x0, std::size_t n);

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxIter = 10000;

/// Plain iteration until |x_{n+1} - x_n| <= tol. Non-convergence is reported
/// through the trace, not thrown.
IterationTrace solve_fixed_point(const FringeMap& map, double x0,
                                 double tol = kDefaultTolerance,
                                 std::size_t max_iter = kDefaultMaxIter);

struct CobwebPoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const CobwebPoint&, const CobwebPoint&) = default;
};

/// Cobweb path (x0,0) -> (x0,f(x0)) -> (f(x0),f(x0)) -> ...; 2n + 1 vertices.
std::vector<CobwebPoint> cobweb_data(const FringeMap& map, double x0, std::size_t n);

/// Two-sided displacement envelope 2 x* at the attracting fixed point.
/// Throws NotConverged when no attracting fixed point is found.
double fringe_width(const FringeMap& map, double tol = kDefaultTolerance,
                    std::size_t max_iter = kDefaultMaxIter);

/// Doubles a single transient iterate (x_index starting from x0), the
/// convention used with the tabulated data.
double fringe_width_transient(const FringeMap& map, double x0, std::size_t index);

}  // namespace metric_ripple
