// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "thetasat/thetasat.hpp"

namespace ts = thetasat;
using ts::complex;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!pass) ++failures;
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const double shape_set[] = {0.1, 0.25, 0.5, 1.0, 2.0, 4.0};

void identity_on_grid() {
  double worst = 0.0;
  for (double d : shape_set) {
    const ts::ShapeParam s(d);
    for (int i = 0; i <= 400; ++i) {
      const double x = -1.0 + 2.0 * i / 400.0;
      const double a = ts::gaussian_sum_direct(x, s, 1e-14).value;
      const double b = ts::gaussian_sum_theta(x, s, 1e-14).value;
      worst = std::max(worst, std::abs(a - b));
    }
  }
  report(1, "periodized Gaussian sum = theta3(pi x, i pi d)", worst < 1e-12,
         fmt("max |direct - theta| = %.3e (limit 1e-12)", worst));
}

void saturation_bound() {
  bool pass = true;
  std::string detail;
  const ts::GridSpec grid{-2.0, 2.0, 1001};
  for (double d : shape_set) {
    const ts::ShapeParam s(d);
    const auto r = ts::error_scan(s, grid, 1e-14);
    const bool below_csch = r.max_abs_error < r.csch_bound + 100 * eps;
    const double sharp = ts::sharp_saturation(s, 1e-16);
    const bool sharp_ok = d > 2.0 || std::abs(r.max_abs_error - sharp) < 1e-12;
    const bool machine_ok = d != 4.0 || r.max_abs_error <= 1e-15;
    pass = pass && below_csch && sharp_ok && machine_ok;
    detail += fmt("d=%g max=%.3e csch=%.3e; ", d, r.max_abs_error, r.csch_bound);
  }
  report(2, "|S_d(x) - 1| < csch(pi^2 d), sharp at lattice points, d=4 at machine precision",
         pass, detail);
}

void modular_identity() {
  double worst = 0.0;
  for (double s : {0.05, 0.1, 0.5, 1.0, 2.0, 10.0}) {
    const complex tau(0.0, s);
    for (int i = 0; i < 50; ++i) {
      const complex z(pi * i / 49.0, 0.0);
      const complex lhs = ts::theta3_qseries(ts::ThetaArgs(z, tau), 1e-13).value;
      const complex prefactor =
          std::exp(z * z / (complex(0.0, pi) * tau)) / std::sqrt(complex(0.0, -1.0) * tau);
      const complex rhs =
          prefactor *
          ts::theta3_qseries(ts::ThetaArgs(z / tau, -1.0 / tau), 1e-13 / std::abs(prefactor)).value;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  report(3, "imaginary transformation residual", worst < 1e-11,
         fmt("max |LHS - RHS| = %.3e (limit 1e-11)", worst));
}

void route_efficiency() {
  const ts::ThetaArgs args(complex(0.0, 0.0), complex(0.0, 0.01));
  const auto modular = ts::theta3_modular(args, 1e-12);
  const auto direct = ts::theta3_qseries(args, 1e-12);
  const bool pass = modular.terms_used <= 3 && direct.terms_used > 100;
  report(4, "modular route <= 3 terms, direct q-series > 100 terms at tau = 0.01i", pass,
         fmt("modular N = %ld, direct N = %ld (%ld summed terms), |difference| = %.3e",
             modular.terms_used, direct.terms_used, 2 * direct.terms_used + 1,
             std::abs(modular.value - direct.value)));
}

void baxter_sandwich() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_int_distribution<int> length(1, 50);
  bool inside = true;
  double worst_route = 0.0;
  for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
    const auto dual = ts::baxter_bounds(lambda, 1e-15);
    const auto lattice = ts::baxter_bounds_lattice(lambda, 1e-15);
    worst_route = std::max({worst_route, std::abs(dual.m - lattice.m), std::abs(dual.M - lattice.M)});
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> a(length(rng));
      for (double& v : a) v = entry(rng);
      const double energy = ts::norm_squared(a);
      const double q = ts::quadratic_form(a, lambda);
      inside = inside && dual.m * energy - 1e-10 * energy <= q &&
               q <= dual.M * energy + 1e-10 * energy;
    }
  }
  report(5, "m |a|^2 <= Q(a) <= M |a|^2 on random vectors; dual and lattice sums agree",
         inside && worst_route < 1e-12,
         fmt("sandwich %s, max route gap = %.3e (limit 1e-12)", inside ? "holds" : "violated",
             worst_route));
}

void asymptotic_sharpness() {
  const std::size_t L = 200;
  std::vector<double> constant(L, 1.0), alternating(L);
  for (std::size_t i = 0; i < L; ++i) alternating[i] = (i % 2 == 0) ? 1.0 : -1.0;
  const auto b = ts::baxter_bounds(1.0, 1e-15);
  const double rel_M =
      std::abs(ts::quadratic_form(constant, 1.0) / ts::norm_squared(constant) - b.M) / b.M;
  const double rel_m =
      std::abs(ts::quadratic_form(alternating, 1.0) / ts::norm_squared(alternating) - b.m) / b.m;
  report(6, "constant/alternating vectors approach M/m", rel_M < 0.02 && rel_m < 0.02,
         fmt("rel gap to M = %.4f, to m = %.4f (limit 0.02)", rel_M, rel_m));
}

void heat_equation() {
  bool pass = true;
  double lo = INFINITY, hi = 0.0;
  for (double x : {0.1, 0.3, 0.45}) {
    for (double t : {0.2, 0.5, 1.0}) {
      const double ratio = ts::pde_residual(x, t, 1e-3) / ts::pde_residual(x, t, 5e-4);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      pass = pass && ratio >= 3.8 && ratio <= 4.2;
    }
  }
  report(7, "heat-equation residual is second order in h", pass,
         fmt("residual ratios in [%.4f, %.4f] (required [3.8, 4.2])", lo, hi));
}

void shape_selection() {
  bool pass = true;
  double worst = 0.0;
  const auto csch = [](double d) { return ts::csch_bound(ts::ShapeParam(d)); };
  for (int i = 0; i < 50; ++i) {
    const double epsilon = std::pow(10.0, -16.0 + 15.0 * i / 49.0);
    const auto s = ts::select_shape(epsilon);
    const double bisected = oracle::bisect_decreasing(csch, epsilon, 1e-3, 10.0);
    worst = std::max(worst, std::abs(bisected - s.d_star));
    pass = pass && ts::csch_bound(ts::ShapeParam(s.d_star)) <= epsilon;
  }
  report(8, "csch bound of the selected shape stays below epsilon; matches bisection",
         pass && worst < 1e-9, fmt("max |bisection - closed form| = %.3e (limit 1e-9)", worst));
}

void figure_tables() {
  const auto twice_equal = [](const std::function<bool(std::ostream&)>& write, bool& ok) {
    std::ostringstream a, b;
    ok = write(a);
    const bool ok2 = write(b);
    ok = ok && ok2;
    return a.str() == b.str() && !a.str().empty();
  };
  bool monotone = false, bounded1 = false, bounded4 = false, basis_ok = false;
  const bool det_bound = twice_equal(
      [](std::ostream& os) { return ts::write_bound_curve(os, {0.1, 4.0, 40}, 1e-13); }, monotone);
  const bool det_err1 = twice_equal(
      [](std::ostream& os) {
        return ts::write_error_curve(os, ts::ShapeParam(1.0), {-3.0, 3.0, 601}, 1e-13);
      },
      bounded1);
  const bool det_err4 = twice_equal(
      [](std::ostream& os) {
        return ts::write_error_curve(os, ts::ShapeParam(4.0), {-3.0, 3.0, 601}, 1e-13);
      },
      bounded4);
  const bool det_basis = twice_equal(
      [](std::ostream& os) {
        const std::vector<double> ds{0.5, 1.0, 2.0, 4.0};
        ts::write_basis_curve(os, ds, {-3.0, 3.0, 601});
        return true;
      },
      basis_ok);
  const bool pass = det_bound && det_err1 && det_err4 && det_basis && monotone && bounded1 &&
                    bounded4 && basis_ok;
  report(9, "figure CSVs deterministic; log bound decreasing; errors within controls", pass,
         fmt("deterministic=%d/%d/%d/%d monotone=%d bounded(d=1)=%d bounded(d=4)=%d", det_bound,
             det_err1, det_err4, det_basis, monotone, bounded1, bounded4));
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<void (*)()> criteria = {
      identity_on_grid, saturation_bound,     modular_identity, route_efficiency, baxter_sandwich,
      asymptotic_sharpness, heat_equation, shape_selection,  figure_tables,
  };
  // with an argument, run only that criterion (1-based)
  if (argc > 1) {
    const int id = std::atoi(argv[1]);
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: acceptance [1-%zu]\n", criteria.size());
      return 2;
    }
    criteria[id - 1]();
  } else {
    for (const auto run : criteria) run();
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
