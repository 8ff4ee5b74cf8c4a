#pragma once

// CSV tables behind the three figures: the csch bound against d, the Gaussian
// basis functions, and the saturation error with its control lines.
//
// Numbers are written in shortest round-trip form, so reparsing a file gives
// back the computed binary64 values bit for bit.

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "gauss_periodic.hpp"
#include "saturation.hpp"

namespace thetasat {

inline std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

namespace detail {

class CsvRow {
 public:
  explicit CsvRow(std::ostream& os) : os_(os) {}
  ~CsvRow() { os_ << '\n'; }
  CsvRow(const CsvRow&) = delete;
  CsvRow& operator=(const CsvRow&) = delete;

  CsvRow& operator<<(double v) { return field(format_double(v)); }
  CsvRow& operator<<(const std::string& s) { return field(s); }

 private:
  CsvRow& field(const std::string& s) {
    if (!first_) os_ << ',';
    os_ << s;
    first_ = false;
    return *this;
  }
  std::ostream& os_;
  bool first_ = true;
};

}  // namespace detail

/// d, csch(pi^2 d), its log10, and theta3(0, i pi d) - 1 on a uniform d grid.
/// Returns true when the log10 column is strictly decreasing.
inline bool write_bound_curve(std::ostream& os, const GridSpec& d_range, double tol) {
  validate(d_range);
  detail::require(d_range.min > 0.0 && d_range.max <= 20.0, "d range must lie within (0, 20]");
  detail::require_tolerance(tol);
  detail::CsvRow(os) << std::string("d") << std::string("csch_bound")
                     << std::string("log10_csch_bound") << std::string("sharp_saturation");
  bool monotone = true;
  double previous = INFINITY;
  for (double d : d_range.points()) {
    const ShapeParam shape(d);
    const double bound = csch_bound(shape);
    const double log_bound = std::log10(bound);
    monotone = monotone && log_bound < previous;
    previous = log_bound;
    detail::CsvRow(os) << d << bound << log_bound << sharp_saturation(shape, tol);
  }
  return monotone;
}

/// x, S_d(x) - 1, +csch(pi^2 d), -csch(pi^2 d). Returns true when every error
/// lies within the control lines up to 100 ulp of 1.
inline bool write_error_curve(std::ostream& os, ShapeParam shape, const GridSpec& grid,
                              double tol) {
  const SaturationReport report = error_scan(shape, grid, tol);
  const double slack = 100.0 * std::numeric_limits<double>::epsilon();
  detail::CsvRow(os) << std::string("x") << std::string("error") << std::string("plus_control")
                     << std::string("minus_control");
  bool bounded = true;
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    bounded = bounded && std::abs(report.errors[i]) <= report.csch_bound + slack;
    detail::CsvRow(os) << report.grid[i] << report.errors[i] << report.csch_bound
                       << -report.csch_bound;
  }
  return bounded;
}

/// x followed by one exp(-x^2 / d) column per shape parameter.
inline void write_basis_curve(std::ostream& os, std::span<const double> d_list,
                              const GridSpec& grid) {
  validate(grid);
  detail::require(!d_list.empty(), "at least one shape parameter is required");
  std::vector<ShapeParam> shapes;
  for (double d : d_list) shapes.emplace_back(d);
  {
    detail::CsvRow header(os);
    header << std::string("x");
    for (double d : d_list) header << "d=" + format_double(d);
  }
  for (double x : grid.points()) {
    detail::CsvRow row(os);
    row << x;
    for (const ShapeParam& s : shapes) row << std::exp(-x * x / s.value());
  }
}

enum class FigureKind { bound_curve, error_curve, basis_curve };

/// gnuplot script that draws the figure from `csv_path`.
inline void write_plot_script(std::ostream& os, FigureKind kind, const std::string& csv_path,
                              const std::string& image_path) {
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set terminal pngcairo size 800,600\n"
     << "set output '" << image_path << "'\n";
  switch (kind) {
    case FigureKind::bound_curve:
      os << "set xlabel 'd'\nset ylabel 'log10 csch(pi^2 d)'\n"
         << "plot '" << csv_path << "' using 1:3 with lines lw 2\n";
      break;
    case FigureKind::error_curve:
      os << "set xlabel 'x'\n"
         << "plot '" << csv_path << "' using 1:2 with lines lc rgb 'blue', \\\n"
         << "     '' using 1:3 with lines dt 4 lc rgb 'red', \\\n"
         << "     '' using 1:4 with lines dt 4 lc rgb 'red'\n";
      break;
    case FigureKind::basis_curve:
      os << "set xlabel 'x'\n"
         << "plot for [i=2:*] '" << csv_path << "' using 1:i with lines lw 2\n";
      break;
  }
}

}  // namespace thetasat
