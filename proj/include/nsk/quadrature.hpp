#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

namespace nsk::quad {

namespace detail {

template <class F>
double simpson_step(F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double abs_tol, double rel_tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double both = left + right;
  const double err = both - whole;
  const double tol = std::max(abs_tol, rel_tol * std::abs(both));
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) return both + err / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * abs_tol, rel_tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * abs_tol, rel_tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson on [a, b] with Richardson correction.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                        int max_depth = 40) {
  if (b <= a) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, rel_tol, max_depth);
}

/// Splits [a, b] into panels no wider than `panel` and runs adaptive Simpson on each with a
/// per-panel relative tolerance, so narrow features and exponentially small tails both keep
/// their relative accuracy.
template <class F>
double panel_simpson(F&& f, double a, double b, double panel, double rel_tol,
                     double abs_tol = 0.0) {
  if (b <= a) return 0.0;
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / panel));
  const double h = (b - a) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = a + h * static_cast<double>(i);
    const double hi = (i + 1 == n) ? b : lo + h;
    sum += adaptive_simpson(f, lo, hi, abs_tol / static_cast<double>(n), rel_tol, 30);
  }
  return sum;
}

/// Composite trapezoid on a uniform grid.
inline double trapezoid(std::span<const double> values, double dx) {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * dx;
}

} // namespace nsk::quad
