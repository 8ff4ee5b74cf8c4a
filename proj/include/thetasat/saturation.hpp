#pragma once

// Saturation error of the Gaussian quasi-interpolant of the constant 1 on the
// integer lattice. For every x,
//
//   |S_d(x) - 1| <= theta3(0, i pi d) - 1 = 2 sum_{n>=1} exp(-pi^2 d n^2)
//                 < csch(pi^2 d),
//
// where the first bound is attained at lattice points and the second follows
// from n^2 >= 2n - 1.

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "gauss_periodic.hpp"
#include "theta.hpp"

namespace thetasat {

/// csch(pi^2 d) = 2 e^{-pi^2 d} / (1 - e^{-2 pi^2 d}). Underflows to 0 once
/// pi^2 d exceeds roughly 745.
inline double csch_bound(ShapeParam shape) {
  const double y = std::numbers::pi * std::numbers::pi * shape.value();
  return -2.0 * std::exp(-y) / std::expm1(-2.0 * y);
}

/// theta3(0, i pi d) - 1, the supremum of |S_d(x) - 1| over x.
inline double sharp_saturation(ShapeParam shape, double tol) {
  const ThetaArgs args(complex(0.0, 0.0), complex(0.0, std::numbers::pi * shape.value()));
  if (select_route(args) == ThetaRoute::qseries) {
    // summed without the leading 1 so small values keep full relative precision
    detail::require_tolerance(tol);
    const double log_q = args.log_abs_nome();
    double tail = 0.0;
    const long N = detail::truncation_index(log_q, 0.0, 0.0, tol, tail);
    double sum = 0.0;
    for (long n = N; n >= 1; --n) {
      const double nd = static_cast<double>(n);
      sum += std::exp(nd * nd * log_q);
    }
    return 2.0 * sum;
  }
  return theta3_auto(args, tol).value.real() - 1.0;
}

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;

  /// i-th point of the uniform grid; endpoints are hit exactly.
  double at(std::size_t i) const {
    if (i + 1 == count) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  std::vector<double> points() const {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = at(i);
    return out;
  }
};

inline void validate(const GridSpec& grid) {
  detail::require(std::isfinite(grid.min) && std::isfinite(grid.max), "grid bounds must be finite");
  detail::require(grid.min < grid.max, "grid requires min < max");
  detail::require(grid.count >= 2, "grid requires at least two points");
}

struct SaturationReport {
  double d = 0.0;
  std::vector<double> grid;
  std::vector<double> errors;  // S_d(x) - 1, aligned with grid
  double max_abs_error = 0.0;
  double sharp_bound = 0.0;
  double csch_bound = 0.0;
};

inline SaturationReport error_scan(ShapeParam shape, const GridSpec& grid, double tol) {
  validate(grid);
  detail::require_tolerance(tol);
  SaturationReport report;
  report.d = shape.value();
  report.grid = grid.points();
  report.errors.reserve(grid.count);
  for (double x : report.grid) {
    const double err = gaussian_sum_direct(x, shape, tol).value - 1.0;
    report.errors.push_back(err);
    report.max_abs_error = std::max(report.max_abs_error, std::abs(err));
  }
  report.sharp_bound = sharp_saturation(shape, tol);
  report.csch_bound = csch_bound(shape);
  return report;
}

/// Smallest shape parameter the selector will return.
inline constexpr double select_shape_d_min = 1e-3;

/// Targets at or above 1 bound nothing useful when approximating 1.
inline constexpr double select_shape_epsilon_max = 1.0;

struct ShapeSelection {
  double epsilon = 0.0;
  double d_star = 0.0;
  double achieved_bound = 0.0;
};

/// Inverts csch(pi^2 d) = epsilon: d* = asinh(1 / epsilon) / pi^2.
inline ShapeSelection select_shape(double epsilon) {
  detail::require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be positive and finite");
  detail::require(epsilon < select_shape_epsilon_max, "epsilon must be below 1");
  double d = std::asinh(1.0 / epsilon) / (std::numbers::pi * std::numbers::pi);
  detail::require(d >= select_shape_d_min, "selected shape parameter falls below d_min");
  double bound = csch_bound(ShapeParam(d));
  // roundoff in asinh can leave the bound an ulp or two above epsilon
  while (bound > epsilon) {
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
    bound = csch_bound(ShapeParam(d));
  }
  return ShapeSelection{epsilon, d, bound};
}

}  // namespace thetasat
