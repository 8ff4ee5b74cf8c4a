// thetasat: command-line front end for the theta-function / saturation-error
// library. Each subcommand prints a report or writes a CSV table.
//
// Exit codes: 0 success, 1 a checked contract failed, 2 invalid arguments,
// 3 precision unattainable, 4 I/O failure.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetasat/thetasat.hpp"

namespace {

namespace ts = thetasat;

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_invalid = 2,
  exit_precision = 3,
  exit_io = 4,
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<double> d;
  double lambda = 1.0;
  double epsilon = 1e-12;
  double tol = 1e-13;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<std::size_t> grid_count;
  std::string out;
  bool plot_script = false;

  double z = 0.0;
  double z_imag = 0.0;
  double tau_real = 0.0;
  double tau_imag = 1.0;
  std::string route = "auto";
  double x = 0.0;
  double t = 0.5;
  double h = 1e-3;
};

ts::GridSpec grid_or(const Options& o, double min, double max, std::size_t count) {
  return ts::GridSpec{o.grid_min.value_or(min), o.grid_max.value_or(max),
                      o.grid_count.value_or(count)};
}

double single_d(const Options& o, double fallback) {
  if (o.d.empty()) return fallback;
  if (o.d.size() > 1) throw ts::invalid_argument("this command takes a single --d");
  return o.d.front();
}

// Runs `produce` against the --out file (or stdout) and, when asked, writes a
// gnuplot script next to the CSV.
bool emit_csv(const Options& o, ts::FigureKind kind,
              const std::function<bool(std::ostream&)>& produce) {
  if (o.plot_script && o.out.empty())
    throw ts::invalid_argument("--plot-script requires --out");
  if (o.out.empty()) return produce(std::cout);

  // render fully before touching the file so validation errors leave no output
  std::ostringstream buffer;
  const bool ok = produce(buffer);
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw io_error("cannot open '" + o.out + "' for writing");
  file << buffer.str();
  file.close();
  if (!file) throw io_error("failed writing '" + o.out + "'");

  if (o.plot_script) {
    const std::string script_path = o.out + ".gp";
    std::ofstream script(script_path);
    if (!script) throw io_error("cannot open '" + script_path + "' for writing");
    ts::write_plot_script(script, kind, o.out, o.out + ".png");
    script.close();
    if (!script) throw io_error("failed writing '" + script_path + "'");
    std::cerr << "plot script: " << script_path << '\n';
  }
  return ok;
}

void print_series(const char* label, const ts::SeriesResult& r) {
  std::cout << label << ".re = " << ts::format_double(r.value.real()) << '\n'
            << label << ".im = " << ts::format_double(r.value.imag()) << '\n'
            << label << ".tail_bound = " << ts::format_double(r.tail_bound) << '\n'
            << label << ".terms_used = " << r.terms_used << '\n';
}

int cmd_theta_eval(const Options& o) {
  const ts::ThetaArgs args(ts::complex(o.z, o.z_imag), ts::complex(o.tau_real, o.tau_imag));
  ts::SeriesResult r;
  if (o.route == "qseries") {
    r = ts::theta3_qseries(args, o.tol);
  } else if (o.route == "cosine") {
    r = ts::theta3_cosine(args, o.tol);
  } else if (o.route == "modular") {
    r = ts::theta3_modular(args, o.tol);
  } else {
    std::cout << "route = "
              << (ts::select_route(args) == ts::ThetaRoute::qseries ? "qseries" : "modular")
              << '\n';
    r = ts::theta3_auto(args, o.tol);
  }
  print_series("theta3", r);
  return exit_ok;
}

int cmd_gauss_sum(const Options& o) {
  const ts::ShapeParam shape(single_d(o, 1.0));
  const ts::PeriodizedSum direct = ts::gaussian_sum_direct(o.x, shape, o.tol);
  const ts::PeriodizedSum theta = ts::gaussian_sum_theta(o.x, shape, o.tol);
  const double gap = std::abs(direct.value - theta.value);
  std::cout << "direct.value = " << ts::format_double(direct.value) << '\n'
            << "direct.tail_bound = " << ts::format_double(direct.tail_bound) << '\n'
            << "direct.terms_used = " << direct.terms_used << '\n'
            << "theta.value = " << ts::format_double(theta.value) << '\n'
            << "theta.tail_bound = " << ts::format_double(theta.tail_bound) << '\n'
            << "theta.terms_used = " << theta.terms_used << '\n'
            << "discrepancy = " << ts::format_double(gap) << '\n';
  return gap <= direct.tail_bound + theta.tail_bound + 1e-13 ? exit_ok : exit_check_failed;
}

int cmd_bound_curve(const Options& o) {
  const ts::GridSpec range = grid_or(o, 0.1, 4.0, 40);
  const bool ok = emit_csv(o, ts::FigureKind::bound_curve, [&](std::ostream& os) {
    return ts::write_bound_curve(os, range, o.tol);
  });
  return ok ? exit_ok : exit_check_failed;
}

int cmd_error_curve(const Options& o) {
  const ts::ShapeParam shape(single_d(o, 1.0));
  const ts::GridSpec grid = grid_or(o, -3.0, 3.0, 601);
  const bool ok = emit_csv(o, ts::FigureKind::error_curve, [&](std::ostream& os) {
    return ts::write_error_curve(os, shape, grid, o.tol);
  });
  return ok ? exit_ok : exit_check_failed;
}

int cmd_basis_curve(const Options& o) {
  const std::vector<double> d_list = o.d.empty() ? std::vector<double>{0.5, 1.0, 2.0, 4.0} : o.d;
  const ts::GridSpec grid = grid_or(o, -3.0, 3.0, 601);
  emit_csv(o, ts::FigureKind::basis_curve, [&](std::ostream& os) {
    ts::write_basis_curve(os, d_list, grid);
    return true;
  });
  return exit_ok;
}

int cmd_select_shape(const Options& o) {
  const ts::ShapeSelection s = ts::select_shape(o.epsilon);
  std::cout << "epsilon = " << ts::format_double(s.epsilon) << '\n'
            << "d_star = " << ts::format_double(s.d_star) << '\n'
            << "achieved_bound = " << ts::format_double(s.achieved_bound) << '\n'
            << "sharp_saturation = "
            << ts::format_double(ts::sharp_saturation(ts::ShapeParam(s.d_star), o.tol)) << '\n';
  return s.achieved_bound <= s.epsilon ? exit_ok : exit_check_failed;
}

int cmd_toeplitz(const Options& o) {
  const ts::QuadraticFormBounds b = ts::baxter_bounds(o.lambda, o.tol);
  const ts::QuadraticFormBounds lattice = ts::baxter_bounds_lattice(o.lambda, o.tol);
  const double gap = std::max(std::abs(b.m - lattice.m), std::abs(b.M - lattice.M));
  std::cout << "lambda = " << ts::format_double(b.lambda) << '\n'
            << "m = " << ts::format_double(b.m) << '\n'
            << "M = " << ts::format_double(b.M) << '\n'
            << "cond_estimate = " << ts::format_double(b.cond_estimate) << '\n'
            << "tail_bound = " << ts::format_double(b.tail_bound) << '\n'
            << "lattice.m = " << ts::format_double(lattice.m) << '\n'
            << "lattice.M = " << ts::format_double(lattice.M) << '\n'
            << "discrepancy = " << ts::format_double(gap) << '\n';
  return gap <= b.tail_bound + lattice.tail_bound + 1e-13 ? exit_ok : exit_check_failed;
}

int cmd_pde_check(const Options& o) {
  const double r = ts::pde_residual(o.x, o.t, o.h);
  const double r_half = ts::pde_residual(o.x, o.t, o.h / 2.0);
  std::cout << "residual(h) = " << ts::format_double(r) << '\n'
            << "residual(h/2) = " << ts::format_double(r_half) << '\n'
            << "ratio = " << ts::format_double(r / r_half) << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi theta functions, periodized Gaussian sums and saturation-error bounds"};
  app.require_subcommand(1);
  Options o;

  const auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "absolute truncation tolerance")->capture_default_str();
  };
  const auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid-min", o.grid_min, "first grid point");
    sub->add_option("--grid-max", o.grid_max, "last grid point");
    sub->add_option("--grid-count", o.grid_count, "number of grid points");
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "CSV output path (default: stdout)");
    sub->add_flag("--plot-script", o.plot_script, "also write a gnuplot script <out>.gp");
  };

  auto* theta = app.add_subcommand("theta-eval", "evaluate theta3(z, tau)");
  theta->add_option("--z", o.z, "real part of z");
  theta->add_option("--z-imag", o.z_imag, "imaginary part of z");
  theta->add_option("--tau-real", o.tau_real, "real part of tau");
  theta->add_option("--tau-imag", o.tau_imag, "imaginary part of tau")->capture_default_str();
  theta->add_option("--route", o.route, "auto, qseries, cosine or modular")
      ->check(CLI::IsMember({"auto", "qseries", "cosine", "modular"}));
  add_tol(theta);

  auto* gauss = app.add_subcommand("gauss-sum", "periodized Gaussian sum by both routes");
  gauss->add_option("--x", o.x, "evaluation point");
  gauss->add_option("--d", o.d, "shape parameter");
  add_tol(gauss);

  auto* bound = app.add_subcommand("bound-curve", "csch(pi^2 d) against d (grid is over d)");
  add_grid(bound);
  add_tol(bound);
  add_output(bound);

  auto* error = app.add_subcommand("error-curve", "saturation error S_d(x) - 1 and its controls");
  error->add_option("--d", o.d, "shape parameter (default 1)");
  add_grid(error);
  add_tol(error);
  add_output(error);

  auto* basis = app.add_subcommand("basis-curve", "Gaussian basis functions exp(-x^2/d)");
  basis->add_option("--d", o.d, "shape parameters (repeatable)");
  add_grid(basis);
  add_output(basis);

  auto* select = app.add_subcommand("select-shape", "shape parameter with csch(pi^2 d) <= epsilon");
  select->add_option("--epsilon", o.epsilon, "target saturation error")->capture_default_str();
  add_tol(select);

  auto* toeplitz = app.add_subcommand("toeplitz", "Gaussian Toeplitz quadratic-form bounds");
  toeplitz->add_option("--lambda", o.lambda, "Gaussian exponent")->capture_default_str();
  add_tol(toeplitz);

  auto* pde = app.add_subcommand("pde-check", "finite-difference heat-equation residual");
  pde->add_option("--x", o.x, "space point");
  pde->add_option("--t", o.t, "time")->capture_default_str();
  pde->add_option("--step", o.h, "finite-difference step h")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*theta) return cmd_theta_eval(o);
    if (*gauss) return cmd_gauss_sum(o);
    if (*bound) return cmd_bound_curve(o);
    if (*error) return cmd_error_curve(o);
    if (*basis) return cmd_basis_curve(o);
    if (*select) return cmd_select_shape(o);
    if (*toeplitz) return cmd_toeplitz(o);
    if (*pde) return cmd_pde_check(o);
  } catch (const ts::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const ts::precision_unattainable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_precision;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  }
  return exit_invalid;
}
