#include "nsk/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace nsk::kernels {

namespace {

inline void node_coefficients(const Exponents& e, double v, double& p, double& m, double& g) {
  const double lv = std::log(v);
  p = std::exp(e.pressure * lv);
  m = std::exp(e.viscous * lv);
  g = std::exp(e.capillary * lv);
}

inline void node_tendency(std::size_t i, double inv_2dx, double inv_dx2, ConstFields in,
                          const Scratch& s, MutFields out) {
  const double* u = in.u;
  const double* w = in.w;
  const double m_r = 0.5 * (s.m[i] + s.m[i + 1]);
  const double m_l = 0.5 * (s.m[i - 1] + s.m[i]);
  const double g_r = 0.5 * (s.g[i] + s.g[i + 1]);
  const double g_l = 0.5 * (s.g[i - 1] + s.g[i]);
  const double du_r = u[i + 1] - u[i], du_l = u[i] - u[i - 1];
  const double dw_r = w[i + 1] - w[i], dw_l = w[i] - w[i - 1];
  out.v[i] = (u[i + 1] - u[i - 1]) * inv_2dx;
  out.u[i] = -(s.p[i + 1] - s.p[i - 1]) * inv_2dx + (m_r * du_r - m_l * du_l) * inv_dx2 +
             (g_r * dw_r - g_l * dw_l) * inv_dx2;
  out.w[i] = -(g_r * du_r - g_l * du_l) * inv_dx2;
}

inline void zero_ends(std::size_t n, MutFields out) {
  out.v[0] = out.u[0] = out.w[0] = 0.0;
  out.v[n - 1] = out.u[n - 1] = out.w[n - 1] = 0.0;
}

int g_threads = 0;

} // namespace

void spatial_rhs_serial(const Exponents& e, double dx, ConstFields in, MutFields out,
                        Scratch& scratch) {
  const std::size_t n = in.n;
  scratch.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    node_coefficients(e, in.v[i], scratch.p[i], scratch.m[i], scratch.g[i]);
  const double inv_2dx = 0.5 / dx, inv_dx2 = 1.0 / (dx * dx);
  for (std::size_t i = 1; i + 1 < n; ++i) node_tendency(i, inv_2dx, inv_dx2, in, scratch, out);
  zero_ends(n, out);
}

void spatial_rhs_parallel(const Exponents& e, double dx, ConstFields in, MutFields out,
                          Scratch& scratch) {
  const auto n = static_cast<std::ptrdiff_t>(in.n);
  scratch.resize(in.n);
  const double inv_2dx = 0.5 / dx, inv_dx2 = 1.0 / (dx * dx);
#pragma omp parallel num_threads(thread_count())
  {
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      node_coefficients(e, in.v[i], scratch.p[i], scratch.m[i], scratch.g[i]);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 1; i < n - 1; ++i)
      node_tendency(static_cast<std::size_t>(i), inv_2dx, inv_dx2, in, scratch, out);
  }
  zero_ends(in.n, out);
}

double constraint_defect_serial(const Exponents& e, double dx, ConstFields in) {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < in.n; ++i) {
    const double g = std::exp(e.capillary * std::log(in.v[i]));
    worst = std::max(worst, std::abs(in.w[i] + g * (in.v[i + 1] - in.v[i - 1]) / (2.0 * dx)));
  }
  return worst;
}

double constraint_defect_parallel(const Exponents& e, double dx, ConstFields in) {
  const auto n = static_cast<std::ptrdiff_t>(in.n);
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static) num_threads(thread_count())
  for (std::ptrdiff_t i = 1; i < n - 1; ++i) {
    const double g = std::exp(e.capillary * std::log(in.v[i]));
    worst = std::max(worst, std::abs(in.w[i] + g * (in.v[i + 1] - in.v[i - 1]) / (2.0 * dx)));
  }
  return worst;
}

FieldBounds field_bounds(const Exponents& e, ConstFields in) {
  FieldBounds b{in.v[0], 0.0, true};
  for (std::size_t i = 0; i < in.n; ++i) {
    const double v = in.v[i];
    if (!std::isfinite(v) || !std::isfinite(in.u[i]) || !std::isfinite(in.w[i])) {
      b.finite = false;
      return b;
    }
    b.v_min = std::min(b.v_min, v);
    if (v > 0.0) {
      const double lv = std::log(v);
      b.nu_max = std::max({b.nu_max, std::exp(e.viscous * lv), std::exp(e.capillary * lv)});
    }
  }
  return b;
}

int thread_count() {
  if (g_threads > 0) return g_threads;
  return std::max(1, omp_get_max_threads());
}

void set_thread_count(int n) { g_threads = std::max(0, n); }

} // namespace nsk::kernels
