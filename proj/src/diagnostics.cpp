#include "nsk/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "nsk/errors.hpp"

namespace nsk {

namespace {

double trapezoid_weighted(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += ((i == 0 || i + 1 == n) ? 0.5 : 1.0) * f[i];
  return sum * dx;
}

double sup(std::span<const double> f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

double l2_squared(std::span<const double> f, double dx) {
  std::vector<double> sq(f.size());
  std::transform(f.begin(), f.end(), sq.begin(), [](double x) { return x * x; });
  return trapezoid_weighted(sq, dx);
}

} // namespace

const std::array<const char*, 23>& record_columns() {
  static const std::array<const char*, 23> cols{
      "t",      "X",   "Xdot", "L2_phi", "L2_psi", "L2_omega", "H1_psi", "H1_omega",
      "W1inf_phi", "Linf_psi", "eta_weighted", "G1", "G3", "GSu", "GSv", "GR",
      "Gw",     "Du1", "Du2",  "Dw1",    "Dw2",    "constraint_defect", "mass_defect"};
  return cols;
}

std::array<double, 23> record_values(const DiagnosticsRecord& r) {
  return {r.t,   r.X,   r.Xdot, r.L2_phi, r.L2_psi, r.L2_omega, r.H1_psi, r.H1_omega,
          r.W1inf_phi, r.Linf_psi, r.eta_weighted, r.G1, r.G3, r.GSu, r.GSv, r.GR,
          r.Gw,  r.Du1, r.Du2,  r.Dw1,    r.Dw2,    r.constraint_defect, r.mass_defect};
}

double relative_entropy_density(const GasModel& model, double v, double u, double w, double vbar,
                                double ubar, double wbar) {
  const double du = u - ubar, dw = w - wbar;
  return 0.5 * du * du + relative_quantity(model, Constitutive::internal_energy, v, vbar) +
         0.5 * dw * dw;
}

Perturbations perturbations(const SimState& s, const std::vector<CompositeSample>& bar) {
  const std::size_t n = s.v.size();
  Perturbations p;
  p.phi.resize(n);
  p.psi.resize(n);
  p.omega.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.phi[i] = s.v[i] - bar[i].v;
    p.psi[i] = s.u[i] - bar[i].u;
    p.omega[i] = s.w[i] - bar[i].w;
  }
  return p;
}

std::vector<double> first_difference(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  d[0] = (f[1] - f[0]) / dx;
  d[n - 1] = (f[n - 1] - f[n - 2]) / dx;
  return d;
}

std::vector<double> second_difference(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 3) return d;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (dx * dx);
  d[0] = d[1];
  d[n - 1] = d[n - 2];
  return d;
}

PerturbationNorms perturbation_norms(const Perturbations& p, double dx) {
  PerturbationNorms n;
  const auto dpsi = first_difference(p.psi, dx);
  const auto domega = first_difference(p.omega, dx);
  const auto dphi = first_difference(p.phi, dx);
  const double psi2 = l2_squared(p.psi, dx), omega2 = l2_squared(p.omega, dx);
  n.L2_phi = std::sqrt(l2_squared(p.phi, dx));
  n.L2_psi = std::sqrt(psi2);
  n.L2_omega = std::sqrt(omega2);
  n.H1_psi = std::sqrt(psi2 + l2_squared(dpsi, dx));
  n.H1_omega = std::sqrt(omega2 + l2_squared(domega, dx));
  n.Linf_phi = sup(p.phi);
  n.W1inf_phi = n.Linf_phi + sup(dphi);
  n.Linf_psi = sup(p.psi);
  return n;
}

GoodTerms good_terms(const GasModel& model, const WavePattern& pattern, const SimState& s,
                     const std::vector<CompositeSample>& bar, double dx) {
  const Perturbations p = perturbations(s, bar);
  const std::size_t n = s.v.size();
  const double C1 = pattern.C1;
  std::vector<double> g1(n), g3(n), gsu(n), gsv(n), gr(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = std::abs(bar[i].a_x);
    const double dp = model.pressure(s.v[i]) - model.pressure(bar[i].v);
    const double r = C1 > 0.0 ? dp - p.psi[i] / (2.0 * C1) : dp;
    g1[i] = ax * r * r;
    g3[i] = ax * p.omega[i] * p.omega[i];
    const double uSx = std::abs(bar[i].S.u_x);
    gsu[i] = uSx * p.psi[i] * p.psi[i];
    gsv[i] = uSx * p.phi[i] * p.phi[i];
    gr[i] = bar[i].R.u[1] * p.phi[i] * p.phi[i];
  }
  GoodTerms g;
  g.G1 = trapezoid_weighted(g1, dx);
  g.G3 = trapezoid_weighted(g3, dx);
  g.GSu = trapezoid_weighted(gsu, dx);
  g.GSv = trapezoid_weighted(gsv, dx);
  g.GR = trapezoid_weighted(gr, dx);
  g.Du1 = l2_squared(first_difference(p.psi, dx), dx);
  g.Du2 = l2_squared(second_difference(p.psi, dx), dx);
  g.Gw = l2_squared(p.omega, dx);
  g.Dw1 = l2_squared(first_difference(p.omega, dx), dx);
  g.Dw2 = l2_squared(second_difference(p.omega, dx), dx);
  return g;
}

double weighted_relative_entropy(const GasModel& model, const SimState& s,
                                 const std::vector<CompositeSample>& bar, double dx) {
  const std::size_t n = s.v.size();
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i)
    f[i] = bar[i].a *
           relative_entropy_density(model, s.v[i], s.u[i], s.w[i], bar[i].v, bar[i].u, bar[i].w);
  return trapezoid_weighted(f, dx);
}

DiagnosticsRecord diagnose(const Solver& solver, const SimState& s) {
  const double dx = solver.grid().dx();
  const auto bar = solver.sample_bar(s.t, s.X);
  const GasModel& model = solver.wave().model();
  const Perturbations p = perturbations(s, bar);
  const PerturbationNorms n = perturbation_norms(p, dx);
  const GoodTerms g = good_terms(model, solver.wave().pattern(), s, bar, dx);

  DiagnosticsRecord r;
  r.t = s.t;
  r.X = s.X;
  r.Xdot = solver.shift_rhs(s.u, s.t, s.X);
  r.L2_phi = n.L2_phi;
  r.L2_psi = n.L2_psi;
  r.L2_omega = n.L2_omega;
  r.H1_psi = n.H1_psi;
  r.H1_omega = n.H1_omega;
  r.W1inf_phi = n.W1inf_phi;
  r.Linf_psi = n.Linf_psi;
  r.eta_weighted = weighted_relative_entropy(model, s, bar, dx);
  r.G1 = g.G1;
  r.G3 = g.G3;
  r.GSu = g.GSu;
  r.GSv = g.GSv;
  r.GR = g.GR;
  r.Gw = g.Gw;
  r.Du1 = g.Du1;
  r.Du2 = g.Du2;
  r.Dw1 = g.Dw1;
  r.Dw2 = g.Dw2;
  r.constraint_defect = solver.constraint_defect(s);
  r.mass_defect = solver.mass_defect(s);
  r.a_min = r.a_max = bar.front().a;
  for (const CompositeSample& b : bar) {
    r.a_min = std::min(r.a_min, b.a);
    r.a_max = std::max(r.a_max, b.a);
  }
  return r;
}

std::pair<double, double> hardy_legendre_gap(std::span<const double> f) {
  const std::size_t n = f.size();
  if (n < 3) throw DomainError("hardy_legendre_gap: at least 3 samples required");
  const double h = 1.0 / static_cast<double>(n - 1);
  const double mean = trapezoid_weighted(f, h);
  std::vector<double> dev(n), weighted(n);
  const auto df = first_difference(f, h);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = h * static_cast<double>(i);
    dev[i] = (f[i] - mean) * (f[i] - mean);
    weighted[i] = y * (1.0 - y) * df[i] * df[i];
  }
  return {trapezoid_weighted(dev, h), 0.5 * trapezoid_weighted(weighted, h)};
}

} // namespace nsk
