#pragma once

// Normalized periodized Gaussian sums
//
//   S_d(x) = (pi d)^{-1/2} sum_{n in Z} exp(-(x - n)^2 / d)
//
// and the identity S_d(x) = theta3(pi x, i pi d).

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "heat.hpp"
#include "theta.hpp"

namespace thetasat {

/// Width d of the Gaussian exp(-x^2 / d); larger d is flatter.
///
/// The stationary scaling phi(alpha/h (x - m h)) with phi(r) = exp(-r^2) on a
/// grid of spacing h corresponds to d = 1 / alpha^2 after rescaling x by h.
class ShapeParam {
 public:
  explicit ShapeParam(double d) : d_(d) {
    detail::require(std::isfinite(d) && d > 0.0, "shape parameter d must be positive and finite");
  }
  double value() const { return d_; }

 private:
  double d_;
};

struct PeriodizedSum {
  double x = 0.0;
  double d = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
  long terms_used = 0;
};

/// Shift x by an integer into [-1/2, 1/2).
inline double reduce_unit_period(double x) { return x - std::floor(x + 0.5); }

namespace detail {

// Sum of exp(-(x - n)^2 / d) over |n| > N for |x| <= 1/2, bounded by
// 2 exp(-(N + 1/2)^2 / d) / (1 - exp(-(2N + 2) / d)).
inline double gaussian_tail(long N, double d) {
  const double half = static_cast<double>(N) + 0.5;
  const double denom = -std::expm1(-(2.0 * static_cast<double>(N) + 2.0) / d);
  return 2.0 * std::exp(-half * half / d) / denom;
}

// Sum of exp(-(u - n*period)^2 / (d*period^2)) for reduced u, |n| <= N, adding
// the pairs n, -n from the outside in.
inline double lattice_gaussian_sum(double u, double period, double d, long N) {
  const double width = d * period * period;
  double sum = 0.0;
  for (long n = N; n >= 1; --n) {
    const double shift = static_cast<double>(n) * period;
    const double a = u - shift;
    const double b = u + shift;
    sum += std::exp(-(a * a) / width) + std::exp(-(b * b) / width);
  }
  return sum + std::exp(-(u * u) / width);
}

// Window half-width by doubling until the normalized tail certificate passes.
inline long gaussian_window(double d, double tol, double& tail_bound) {
  const double norm = 1.0 / std::sqrt(std::numbers::pi * d);
  for (long N = 1;; N *= 2) {
    if (N > max_terms)
      throw precision_unattainable("periodized Gaussian sum needs more than " +
                                   std::to_string(max_terms) + " terms at d = " +
                                   std::to_string(d));
    const double bound = norm * gaussian_tail(N, d);
    if (bound < tol) {
      tail_bound = bound;
      return N;
    }
  }
}

}  // namespace detail

/// S_d(x) by direct summation over a window grown until the tail is below tol.
inline PeriodizedSum gaussian_sum_direct(double x, ShapeParam shape, double tol) {
  detail::require_tolerance(tol);
  detail::require(std::isfinite(x), "x must be finite");
  const double d = shape.value();
  PeriodizedSum out{x, d, 0.0, 0.0, 0};
  out.terms_used = detail::gaussian_window(d, tol, out.tail_bound);
  const double u = reduce_unit_period(x);
  out.value = detail::lattice_gaussian_sum(u, 1.0, d, out.terms_used) /
              std::sqrt(std::numbers::pi * d);
  return out;
}

/// S_d(x) as theta3(pi x, i pi d).
inline PeriodizedSum gaussian_sum_theta(double x, ShapeParam shape, double tol) {
  detail::require_tolerance(tol);
  detail::require(std::isfinite(x), "x must be finite");
  const double d = shape.value();
  const ThetaArgs args(complex(std::numbers::pi * reduce_unit_period(x), 0.0),
                       complex(0.0, std::numbers::pi * d));
  const SeriesResult r = theta3_auto(args, tol);
  return PeriodizedSum{x, d, r.value.real(), r.tail_bound, r.terms_used};
}

/// Largest pairwise discrepancy between three forms of the same quantity at z:
///   (pi d)^{-1/2} sum exp(-(z - n pi)^2 / (d pi^2))   (period-pi lattice in z),
///   S_d(z / pi)                                       (unit lattice),
///   u(z / pi, d) = 1 + 2 sum exp(-m^2 pi^2 d) cos(2 m z)  (heat-kernel form).
inline double equivalent_forms_check(double z, ShapeParam shape, double tol) {
  detail::require_tolerance(tol);
  detail::require(std::isfinite(z), "z must be finite");
  const double d = shape.value();

  double tail = 0.0;
  const long N = detail::gaussian_window(d, tol, tail);
  const double pi = std::numbers::pi;
  const double zr = z - pi * std::floor(z / pi + 0.5);
  const double lattice_pi = detail::lattice_gaussian_sum(zr, pi, d, N) / std::sqrt(pi * d);

  const double lattice_unit = gaussian_sum_direct(z / pi, shape, tol).value;

  const double x = z / pi;
  const double heat = 1.0 + heat_series_deviation(x, d, heat_modes(d));

  return std::max({std::abs(lattice_pi - lattice_unit), std::abs(lattice_pi - heat),
                   std::abs(lattice_unit - heat)});
}

}  // namespace thetasat
