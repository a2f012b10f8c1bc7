#include "metric_ripple/fringe.hpp"

#include <cmath>
#include <numbers>

#include "metric_ripple/error.hpp"

namespace metric_ripple {

double FringeMap::operator()(double x) const { return a2 * std::cos(c * x); }

double FringeMap::derivative(double x) const { return -a2 * c * std::sin(c * x); }

void FringeMap::validate() const {
  // a2 = 0 and c = 0 are accepted as degenerate constant maps.
  require(a2 >= 0 && std::isfinite(a2), "fringe map: a2 must be non-negative");
  require(c >= 0 && std::isfinite(c), "fringe map: c must be non-negative");
}

FringeMap fringe_map_from(double a2, double lambda, double d, double D, double pi) {
  require(lambda > 0, "fringe map: lambda must be positive");
  require(d > 0, "fringe map: d must be positive");
  require(D > 0, "fringe map: D must be positive");
  require(pi > 0, "fringe map: pi must be positive");
  FringeMap map{a2, 2.0 * pi / lambda * (d / D)};
  map.validate();
  return map;
}

FringeMap table1_map(TableOptions options) {
  const double d = options.literal_d ? kTableLiteralSlitSeparation : kTableSlitSeparation;
  const double pi = options.exact_pi ? std::numbers::pi : kTablePi;
  return fringe_map_from(kTableA2, kTableLambda, d, kTableD, pi);
}

IterationTrace iterate(const FringeMap& map, double x0, std::size_t n) {
  map.validate();
  require(n >= 1, "iterate: n must be at least 1");
  IterationTrace trace;
  trace.iterates.reserve(n + 1);
  trace.iterates.push_back(x0);
  double x = x0;
  for (std::size_t k = 0; k < n; ++k) {
    x = map(x);
    trace.iterates.push_back(x);
  }
  trace.residual = std::abs(x - map(x));
  return trace;
}

IterationTrace solve_fixed_point(const FringeMap& map, double x0, double tol,
                                 std::size_t max_iter) {
  map.validate();
  require(tol > 0, "solve_fixed_point: tol must be positive");
  IterationTrace trace;
  trace.iterates.push_back(x0);
  double x = x0;
  for (std::size_t k = 0; k < max_iter; ++k) {
    const double next = map(x);
    trace.iterates.push_back(next);
    const double step = std::abs(next - x);
    x = next;
    if (step <= tol) {
      trace.converged = true;
      break;
    }
  }
  trace.residual = std::abs(x - map(x));
  trace.repelling = std::abs(map.derivative(x)) >= 1.0;
  if (trace.converged) trace.fixed_point = x;
  return trace;
}

std::vector<CobwebPoint> cobweb_data(const FringeMap& map, double x0, std::size_t n) {
  map.validate();
  require(n >= 1, "cobweb_data: n must be at least 1");
  std::vector<CobwebPoint> path;
  path.reserve(2 * n + 1);
  path.push_back({x0, 0.0});
  double x = x0;
  for (std::size_t k = 0; k < n; ++k) {
    const double y = map(x);
    path.push_back({x, y});
    path.push_back({y, y});
    x = y;
  }
  return path;
}

double fringe_width(const FringeMap& map, double tol, std::size_t max_iter) {
  const IterationTrace trace = solve_fixed_point(map, 0.0, tol, max_iter);
  if (!trace.converged || trace.repelling)
    throw Error(ErrorCode::NotConverged, "fringe_width: no attracting fixed point found");
  return 2.0 * *trace.fixed_point;
}

double fringe_width_transient(const FringeMap& map, double x0, std::size_t index) {
  if (index == 0) return 2.0 * x0;
  return 2.0 * iterate(map, x0, index).iterates.back();
}

}  // namespace metric_ripple
