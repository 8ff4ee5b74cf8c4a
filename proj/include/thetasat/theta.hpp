#pragma once

// Jacobi's third theta function
//
//   theta3(z, tau) = sum_{n in Z} exp(2inz + i pi n^2 tau),   Im(tau) > 0,
//
// evaluated by three routes that must agree: the defining q-series, the
// cosine series 1 + 2 sum q^{n^2} cos(2nz), and the imaginary (modular)
// transformation
//
//   theta3(z, tau) = (-i tau)^{-1/2} exp(z^2 / (i pi tau)) theta3(z/tau, -1/tau).
//
// Every evaluation returns a certified absolute bound on the truncation tail.
// With y = |Im z| and r = |q| = exp(-pi Im tau) the one-sided tail obeys
//
//   sum_{n>N} r^{n^2} e^{2ny} <= r^{(N+1)^2} e^{2(N+1)y} / (1 - r^{2N+3} e^{2y})
//
// whenever the denominator is positive; both sides of the lattice are covered
// by doubling it.

#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"

namespace thetasat {

using complex = std::complex<double>;

class ThetaArgs {
 public:
  ThetaArgs(complex z, complex tau) : z_(z), tau_(tau) {
    detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()),
                    "theta argument z must be finite");
    detail::require(std::isfinite(tau.real()) && std::isfinite(tau.imag()),
                    "theta parameter tau must be finite");
    detail::require(tau.imag() > 0.0, "theta parameter tau must satisfy Im(tau) > 0");
  }

  complex z() const { return z_; }
  complex tau() const { return tau_; }

  /// q = exp(i pi tau); |q| < 1 by construction.
  complex nome() const { return std::exp(complex(0.0, std::numbers::pi) * tau_); }
  double log_abs_nome() const { return -std::numbers::pi * tau_.imag(); }

 private:
  complex z_;
  complex tau_;
};

struct SeriesResult {
  complex value;
  double tail_bound = 0.0;  // absolute
  long terms_used = 0;      // one-sided index N; indices |n| <= N were summed
};

enum class ThetaRoute { qseries, modular };

/// Nome magnitude above which theta3_auto prefers the modular route (the
/// self-dual point tau = i).
inline const double q_switch = std::exp(-std::numbers::pi);

namespace detail {

// log of the two-sided tail bound after truncating at N, or +inf when the
// geometric domination does not yet hold.
inline double log_tail_bound(long N, double log_r, double y) {
  const double n1 = static_cast<double>(N) + 1.0;
  const double log_rho = (2.0 * static_cast<double>(N) + 3.0) * log_r + 2.0 * y;
  if (!(log_rho < 0.0)) return INFINITY;
  return std::numbers::ln2 + n1 * n1 * log_r + 2.0 * n1 * y - std::log1p(-std::exp(log_rho));
}

// Smallest N >= 1 whose certified tail, scaled by exp(log_scale), is below tol.
inline long truncation_index(double log_r, double y, double log_scale, double tol,
                             double& tail_bound) {
  const double log_tol = std::log(tol);
  for (long N = 1; N <= max_terms; ++N) {
    const double lb = log_tail_bound(N, log_r, y) + log_scale;
    if (lb < log_tol) {
      tail_bound = std::exp(lb);
      return N;
    }
  }
  throw precision_unattainable("theta series needs more than " + std::to_string(max_terms) +
                               " terms for the requested tolerance");
}

// exp(log_scale) * theta3(z, tau) by the defining series. Folding the scale
// into each exponent keeps large transformed terms from overflowing.
inline SeriesResult qseries_scaled(complex z, complex tau, complex log_scale, double tol) {
  SeriesResult out;
  out.terms_used = truncation_index(-std::numbers::pi * tau.imag(), std::abs(z.imag()),
                                    log_scale.real(), tol, out.tail_bound);
  const complex i_pi_tau = complex(0.0, std::numbers::pi) * tau;
  const complex two_i_z = complex(0.0, 2.0) * z;
  complex sum(0.0, 0.0);
  for (long n = out.terms_used; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    const complex quad = nd * nd * i_pi_tau;
    const complex lin = nd * two_i_z;
    // the pair (n, -n); swapping z for -z swaps the summands exactly
    sum += std::exp(log_scale + (quad + lin)) + std::exp(log_scale + (quad - lin));
  }
  out.value = sum + std::exp(log_scale);
  return out;
}

}  // namespace detail

/// Defining series sum_{|n|<=N} exp(2inz + i pi n^2 tau).
inline SeriesResult theta3_qseries(const ThetaArgs& args, double tol) {
  detail::require_tolerance(tol);
  return detail::qseries_scaled(args.z(), args.tau(), complex(0.0, 0.0), tol);
}

/// Cosine series 1 + 2 sum_{n=1}^N q^{n^2} cos(2nz). The angle is 2nz (not
/// 2 pi n z) so that this route equals the defining series identically.
inline SeriesResult theta3_cosine(const ThetaArgs& args, double tol) {
  detail::require_tolerance(tol);
  SeriesResult out;
  // |cos(2nz)| <= cosh(2n Im z) <= e^{2n|Im z|}, so the q-series certificate applies
  out.terms_used = detail::truncation_index(args.log_abs_nome(), std::abs(args.z().imag()), 0.0,
                                            tol, out.tail_bound);
  const complex i_pi_tau = complex(0.0, std::numbers::pi) * args.tau();
  complex sum(0.0, 0.0);
  for (long n = out.terms_used; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    sum += std::exp(nd * nd * i_pi_tau) * std::cos(2.0 * nd * args.z());
  }
  out.value = 1.0 + 2.0 * sum;
  return out;
}

/// Evaluates theta3(z, tau) through the imaginary transformation. Only the
/// imaginary axis tau = i s is supported, where (-i tau)^{1/2} = s^{1/2} has no
/// branch ambiguity. z is first reduced by the period pi.
inline SeriesResult theta3_modular(const ThetaArgs& args, double tol) {
  detail::require_tolerance(tol);
  detail::require(args.tau().real() == 0.0,
                  "modular route requires purely imaginary tau (Re(tau) == 0)");
  const double s = args.tau().imag();
  const complex z = args.z();
  const double shift = std::numbers::pi * std::round(z.real() / std::numbers::pi);
  const complex zr(z.real() - shift, z.imag());

  // (-i tau)^{-1/2} exp(z^2 / (i pi tau)) = s^{-1/2} exp(-z^2 / (pi s))
  const complex log_scale = -0.5 * std::log(s) - zr * zr / (std::numbers::pi * s);
  const complex z_dual(zr.imag() / s, -zr.real() / s);  // z / tau
  const complex tau_dual(0.0, 1.0 / s);                  // -1 / tau
  return detail::qseries_scaled(z_dual, tau_dual, log_scale, tol);
}

inline ThetaRoute select_route(const ThetaArgs& args) {
  if (std::exp(args.log_abs_nome()) <= q_switch) return ThetaRoute::qseries;
  // off the imaginary axis the modular route is unavailable; the direct
  // series is still valid, just slower
  if (args.tau().real() != 0.0) return ThetaRoute::qseries;
  return ThetaRoute::modular;
}

inline SeriesResult theta3_auto(const ThetaArgs& args, double tol) {
  return select_route(args) == ThetaRoute::qseries ? theta3_qseries(args, tol)
                                                   : theta3_modular(args, tol);
}

}  // namespace thetasat
