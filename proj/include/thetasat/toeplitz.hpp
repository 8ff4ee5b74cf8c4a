#pragma once

// Bounds on the Gaussian Toeplitz quadratic form
//
//   Q(a) = sum_{j,k} a_j a_k exp(-lambda (j - k)^2),
//
// m |a|^2 <= Q(a) <= M |a|^2, where m and M are the extreme values of the
// symbol sum_n exp(-lambda n^2) e^{i n w}, attained at w = pi and w = 0.
// Poisson summation turns the symbol into a rapidly convergent dual sum:
//
//   M = sqrt(pi/lambda) sum_k exp(-pi^2 k^2 / lambda)
//   m = sqrt(pi/lambda) sum_k exp(-(pi + 2 pi k)^2 / (4 lambda))
//
// Only the one-dimensional lattice is handled.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "errors.hpp"
#include "theta.hpp"

namespace thetasat {

struct QuadraticFormBounds {
  double lambda = 0.0;
  double m = 0.0;
  double M = 0.0;
  double cond_estimate = 0.0;  // M / m
  double tail_bound = 0.0;     // largest certified tail of the two sums
};

namespace detail {

inline void require_lambda(double lambda) {
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive and finite");
}

inline QuadraticFormBounds make_bounds(double lambda, double m, double M, double tail) {
  return QuadraticFormBounds{lambda, m, M, M / m, tail};
}

}  // namespace detail

/// m and M from the dual (theta-side) sums.
inline QuadraticFormBounds baxter_bounds(double lambda, double tol) {
  detail::require_lambda(lambda);
  detail::require_tolerance(tol);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double scale = std::sqrt(std::numbers::pi / lambda);

  double tail_upper = 0.0;
  const long K = detail::truncation_index(-pi2 / lambda, 0.0, std::log(scale), tol, tail_upper);
  double upper = 0.0;
  for (long k = K; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    upper += 2.0 * std::exp(-pi2 * kd * kd / lambda);
  }
  upper = scale * (1.0 + upper);

  // odd j = 2k + 1 over all k; the tail past j = 2K+1 is dominated by the
  // full-lattice tail with nome exp(-pi^2 / (4 lambda))
  const double log_r = -pi2 / (4.0 * lambda);
  double tail_lower = 0.0;
  long J = 1;
  for (;; J += 2) {
    if (J > max_terms)
      throw precision_unattainable("Toeplitz lower bound needs too many terms at lambda = " +
                                   std::to_string(lambda));
    const double lb = detail::log_tail_bound(J, log_r, 0.0) + std::log(scale);
    if (lb < std::log(tol)) {
      tail_lower = std::exp(lb);
      break;
    }
  }
  double lower = 0.0;
  for (long j = J; j >= 1; j -= 2) {
    const double jd = static_cast<double>(j);
    lower += 2.0 * std::exp(jd * jd * log_r);
  }
  lower *= scale;

  return detail::make_bounds(lambda, lower, upper, std::max(tail_upper, tail_lower));
}

/// m and M summed directly on the lattice: sum (-1)^n e^{-lambda n^2} and
/// sum e^{-lambda n^2}.
inline QuadraticFormBounds baxter_bounds_lattice(double lambda, double tol) {
  detail::require_lambda(lambda);
  detail::require_tolerance(tol);
  double tail = 0.0;
  const long N = detail::truncation_index(-lambda, 0.0, 0.0, tol, tail);
  double plain = 0.0;
  double alternating = 0.0;
  for (long n = N; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    const double term = 2.0 * std::exp(-lambda * nd * nd);
    plain += term;
    alternating += (n % 2 == 0) ? term : -term;
  }
  return detail::make_bounds(lambda, 1.0 + alternating, 1.0 + plain, tail);
}

inline double norm_squared(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

/// sum_{j,k} a_j a_k exp(-lambda (j-k)^2) over the index range of a.
inline double quadratic_form(std::span<const double> a, double lambda) {
  detail::require_lambda(lambda);
  detail::require(!a.empty(), "coefficient vector must be nonempty");
  for (double v : a) detail::require(std::isfinite(v), "coefficients must be finite");

  const std::size_t n = a.size();
  double off_diagonal = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double f = std::exp(-lambda * kd * kd);
    if (f == 0.0) break;  // every further diagonal underflows too
    double lag = 0.0;
    for (std::size_t j = 0; j + k < n; ++j) lag += a[j] * a[j + k];
    off_diagonal += f * lag;
  }
  return norm_squared(a) + 2.0 * off_diagonal;
}

struct SandwichSlack {
  double lower_slack = 0.0;  // Q(a) - m |a|^2
  double upper_slack = 0.0;  // M |a|^2 - Q(a)
};

inline SandwichSlack sandwich_check(std::span<const double> a, double lambda, double tol = 1e-15) {
  const double q = quadratic_form(a, lambda);
  const QuadraticFormBounds b = baxter_bounds(lambda, tol);
  const double energy = norm_squared(a);
  return SandwichSlack{q - b.m * energy, b.M * energy - q};
}

}  // namespace thetasat
