#pragma once

// The periodized heat kernel
//
//   u(x, t) = 1 + 2 sum_{m>=1} exp(-m^2 pi^2 t) cos(2 m pi x)
//
// which equals theta3(pi x, i pi t). Term by term, d/dt brings down -m^2 pi^2
// and d^2/dx^2 brings down -4 m^2 pi^2, so u_t = u_xx / 4.

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace thetasat {

inline constexpr double heat_diffusivity = 0.25;

/// Number of cosine modes after which exp(-m^2 pi^2 t) is below binary64
/// underflow for every time >= t_min.
inline long heat_modes(double t_min) {
  detail::require(t_min > 0.0, "heat series needs t > 0");
  const double m = std::ceil(std::sqrt(745.0 / (std::numbers::pi * std::numbers::pi * t_min)));
  if (!(m <= static_cast<double>(max_terms)))
    throw precision_unattainable("heat series needs too many modes at t = " +
                                 std::to_string(t_min));
  return static_cast<long>(m) + 1;
}

/// u(x, t) - 1 summed over the first `modes` cosine terms.
inline double heat_series_deviation(double x, double t, long modes) {
  double sum = 0.0;
  for (long m = modes; m >= 1; --m) {
    const double md = static_cast<double>(m);
    sum += std::exp(-md * md * std::numbers::pi * std::numbers::pi * t) *
           std::cos(2.0 * std::numbers::pi * md * x);
  }
  return 2.0 * sum;
}

inline double heat_series(double x, double t) {
  return 1.0 + heat_series_deviation(x, t, heat_modes(t));
}

/// |u_t - u_xx / 4| at (x, t) by second-order central differences with step h.
/// The exact residual is zero; the returned value is the O(h^2) discretization
/// error. Differences are taken on u - 1 so the constant term adds no roundoff.
inline double pde_residual(double x, double t, double h) {
  detail::require(std::isfinite(x), "x must be finite");
  detail::require(std::isfinite(t) && t > 0.0, "t must be positive");
  detail::require(std::isfinite(h) && h > 0.0, "step h must be positive");
  detail::require(t - h > 0.0, "step h must be smaller than t");

  // same modes for every stencil point so the differenced function is one
  // fixed trigonometric polynomial
  const long modes = heat_modes(t - h);
  const auto v = [modes](double xx, double tt) { return heat_series_deviation(xx, tt, modes); };

  const double centre = v(x, t);
  const double u_t = (v(x, t + h) - v(x, t - h)) / (2.0 * h);
  const double u_xx = (v(x + h, t) - 2.0 * centre + v(x - h, t)) / (h * h);
  return std::abs(u_t - heat_diffusivity * u_xx);
}

}  // namespace thetasat
