#include "nsk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nsk/errors.hpp"

namespace nsk {

void Grid::validate() const {
  if (!(x_lo < x_hi)) throw ConfigError("grid: x_lo must be below x_hi");
  if (n < 16) throw ConfigError("grid: n must be at least 16");
}

double Perturbation::value(double x) const {
  if (kind == PerturbationKind::none) return 0.0;
  const double z = (x - center) / width;
  return amplitude * std::exp(-0.5 * z * z);
}

void SchemeConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 0.5)) throw ConfigError("scheme: cfl must lie in (0, 0.5]");
  if (!(t_end >= 0.0)) throw ConfigError("scheme: t_end must be non-negative");
  if (output_stride == 0) throw ConfigError("scheme: output_stride must be positive");
  if (perturbation.kind == PerturbationKind::gaussian && !(perturbation.width > 0.0))
    throw ConfigError("perturbation: width must be positive");
  if (std::abs(perturbation.amplitude) > amplitude_cap)
    throw ConfigError("perturbation: amplitude exceeds the cap");
}

Solver::Solver(const CompositeWave& wave, Grid grid, SchemeConfig config)
    : wave_(wave), grid_(grid), config_(std::move(config)),
      exps_(kernels::Exponents::from(wave.model())) {
  grid_.validate();
  config_.validate();
  x_.resize(grid_.n);
  for (std::size_t i = 0; i < grid_.n; ++i) x_[i] = grid_.x(i);
  x_.back() = grid_.x_hi;
  const WavePattern& p = wave_.pattern();
  shift_active_ = config_.shift_enabled && wave_.has_shock();
  shift_gain_ = shift_active_ ? -p.M / p.delta_S : 0.0;
  stage_v_.resize(grid_.n);
  stage_u_.resize(grid_.n);
  stage_w_.resize(grid_.n);
  for (auto& k : k_) k.resize(grid_.n);
}

std::vector<CompositeSample> Solver::sample_bar(double t, double X) const {
  std::vector<CompositeSample> out(grid_.n);
  const auto n = static_cast<std::ptrdiff_t>(grid_.n);
#pragma omp parallel for schedule(static) if (config_.parallel) num_threads(kernels::thread_count())
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = wave_.eval_bar(t, x_[i], X);
  return out;
}

SimState Solver::initial_data() const {
  const Perturbation& pert = config_.perturbation;
  if (std::abs(pert.amplitude) > config_.amplitude_cap)
    throw ConfigError("perturbation: amplitude exceeds the cap");
  const std::size_t n = grid_.n;
  const auto bar = sample_bar(0.0, 0.0);
  SimState s;
  s.v.resize(n);
  s.u.resize(n);
  s.w.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double bump = pert.value(x_[i]);
    s.v[i] = bar[i].v + (pert.touches_v() ? bump : 0.0);
    s.u[i] = bar[i].u + (pert.touches_u() ? bump : 0.0);
  }
  const WavePattern& p = wave_.pattern();
  s.v.front() = p.left.v;
  s.u.front() = p.left.u;
  s.v.back() = p.right.v;
  s.u.back() = p.right.u;
  for (std::size_t i = 0; i < n; ++i)
    if (!(s.v[i] > config_.vacuum_floor))
      throw ConfigError("initial data: perturbed volume is not positive");
  const PowerLaw g = wave_.model().capillary_coefficient();
  const double dx = grid_.dx();
  for (std::size_t i = 1; i + 1 < n; ++i)
    s.w[i] = -g(s.v[i]) * (s.v[i + 1] - s.v[i - 1]) / (2.0 * dx);

  double mass = 0.0, total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    mass += wt * (s.v[i] - bar[i].v);
    total += wt * s.v[i];
  }
  s.mass0 = mass * dx;
  s.mass_scale = total * dx;
  return s;
}

void Solver::derivatives(const std::vector<double>& v, const std::vector<double>& u,
                         const std::vector<double>& w, std::vector<double>& vt,
                         std::vector<double>& ut, std::vector<double>& wt) const {
  const kernels::ConstFields in{v.data(), u.data(), w.data(), grid_.n};
  const kernels::MutFields out{vt.data(), ut.data(), wt.data()};
  if (config_.parallel)
    kernels::spatial_rhs_parallel(exps_, grid_.dx(), in, out, scratch_);
  else
    kernels::spatial_rhs_serial(exps_, grid_.dx(), in, out, scratch_);
}

void Solver::spatial_rhs(const SimState& s, std::vector<double>& vt, std::vector<double>& ut,
                         std::vector<double>& wt) const {
  vt.resize(grid_.n);
  ut.resize(grid_.n);
  wt.resize(grid_.n);
  derivatives(s.v, s.u, s.w, vt, ut, wt);
}

std::pair<std::size_t, std::size_t> Solver::shock_range(double t, double X) const {
  if (!wave_.has_shock()) return {1, 0};
  const ShockProfile& prof = wave_.profile();
  const double shift = wave_.pattern().sigma * t + X;
  const double dx = grid_.dx();
  const double lo_f = std::ceil((shift + prof.xi_min() - grid_.x_lo) / dx);
  const double hi_f = std::floor((shift + prof.xi_max() - grid_.x_lo) / dx);
  const double last = static_cast<double>(grid_.n - 1);
  if (hi_f < 0.0 || lo_f > last) return {1, 0};
  return {static_cast<std::size_t>(std::max(0.0, lo_f)),
          static_cast<std::size_t>(std::min(last, hi_f))};
}

const std::vector<double>& Solver::rarefaction_u_dev(double t, std::size_t lo,
                                                     std::size_t hi) const {
  for (const RareCache& c : cache_)
    if (c.t == t && c.lo <= lo && hi <= c.hi) return c.u_dev;
  RareCache& c = cache_[cache_next_];
  cache_next_ = (cache_next_ + 1) % cache_.size();
  c.t = t;
  c.lo = lo > 32 ? lo - 32 : 0;
  c.hi = std::min(grid_.n - 1, hi + 32);
  c.u_dev.resize(grid_.n);
  const RarefactionWave& rw = wave_.rarefaction();
  const auto a = static_cast<std::ptrdiff_t>(c.lo), b = static_cast<std::ptrdiff_t>(c.hi);
#pragma omp parallel for schedule(static) if (config_.parallel) num_threads(kernels::thread_count())
  for (std::ptrdiff_t i = a; i <= b; ++i) c.u_dev[i] = rw.deviations(t, x_[i]).second;
  return c.u_dev;
}

double Solver::shift_rhs(const std::vector<double>& u, double t, double X) const {
  if (!shift_active_) return 0.0;
  const auto [lo, hi] = shock_range(t, X);
  if (lo > hi) return 0.0;
  const std::vector<double>& u_dev = rarefaction_u_dev(t, lo, hi);
  const WavePattern& p = wave_.pattern();
  const ShockProfile& prof = wave_.profile();
  const double sigma = p.sigma;
  const double k = sigma / std::sqrt(p.delta_S);
  const double shift = sigma * t + X;
  const PowerLaw dp = wave_.model().pressure_law().derivative();
  std::vector<double> buf(hi - lo + 1);
  const auto a = static_cast<std::ptrdiff_t>(lo), b = static_cast<std::ptrdiff_t>(hi);
#pragma omp parallel for schedule(static) if (config_.parallel) num_threads(kernels::thread_count())
  for (std::ptrdiff_t i = a; i <= b; ++i) {
    const ProfileSample S = prof.eval(x_[i] - shift);
    const double weight = 1.0 + k * S.dev_m;
    const double ubar = p.mid.u + u_dev[i] - sigma * S.dev_m;
    buf[i - a] = weight * S.v_x * (u[i] - ubar) * (-sigma + dp(S.v) / sigma);
  }
  double sum = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) {
    const double wt = (i == 0 || i + 1 == grid_.n) ? 0.5 : 1.0;
    sum += wt * buf[i - lo];
  }
  return shift_gain_ * sum * grid_.dx();
}

double Solver::bar_flux(double t, double X, double Xdot) const {
  const CompositeSample l = wave_.eval_bar(t, grid_.x_lo, X);
  const CompositeSample r = wave_.eval_bar(t, grid_.x_hi, X);
  return (r.u - l.u) - Xdot * (r.S.dev_m - l.S.dev_m);
}

double Solver::trapezoid_mass(const std::vector<double>& v, double t, double X) const {
  const std::size_t n = grid_.n;
  std::vector<double> dev(n);
  const auto nn = static_cast<std::ptrdiff_t>(n);
  const RarefactionWave& rw = wave_.rarefaction();
  const double shift = wave_.pattern().sigma * t + X;
#pragma omp parallel for schedule(static) if (config_.parallel) num_threads(kernels::thread_count())
  for (std::ptrdiff_t i = 0; i < nn; ++i) {
    const double vbar = wave_.pattern().mid.v + rw.deviations(t, x_[i]).first +
                        wave_.shock_at(x_[i] - shift).dev_m;
    dev[i] = v[i] - vbar;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += ((i == 0 || i + 1 == n) ? 0.5 : 1.0) * dev[i];
  return sum * grid_.dx();
}

double Solver::stable_dt(const SimState& s) const {
  const kernels::FieldBounds b =
      kernels::field_bounds(exps_, {s.v.data(), s.u.data(), s.w.data(), grid_.n});
  if (!b.finite) {
    std::ostringstream msg;
    msg << "non-finite field values at t = " << s.t;
    throw SolverError(msg.str());
  }
  if (!(b.v_min > config_.vacuum_floor)) {
    std::ostringstream msg;
    msg << "vacuum: v_min = " << b.v_min << " at t = " << s.t;
    throw SolverError(msg.str());
  }
  const double dx = grid_.dx();
  return config_.cfl * dx * dx / b.nu_max;
}

void Solver::step(SimState& s, double dt) const {
  const double limit = stable_dt(s);
  if (!(dt > 0.0) || dt > limit * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "CFL violation: dt = " << dt << " exceeds " << limit;
    throw SolverError(msg.str());
  }
  const std::size_t n = grid_.n;
  auto flux_v = [&](const std::vector<double>& u) {
    return 0.5 * (u[n - 1] + u[n - 2] - u[1] - u[0]);
  };

  std::array<double, 4> Xd{}, Fv{}, Fb{};
  const std::array<double, 4> c{0.0, 0.5, 0.5, 1.0};
  for (int stage = 0; stage < 4; ++stage) {
    const std::vector<double>* v = &s.v;
    const std::vector<double>* u = &s.u;
    const std::vector<double>* w = &s.w;
    double X = s.X;
    if (stage > 0) {
      const double h = c[stage] * dt;
      const auto& kv = k_[3 * (stage - 1)];
      const auto& ku = k_[3 * (stage - 1) + 1];
      const auto& kw = k_[3 * (stage - 1) + 2];
      for (std::size_t i = 0; i < n; ++i) {
        stage_v_[i] = s.v[i] + h * kv[i];
        stage_u_[i] = s.u[i] + h * ku[i];
        stage_w_[i] = s.w[i] + h * kw[i];
      }
      v = &stage_v_;
      u = &stage_u_;
      w = &stage_w_;
      X = s.X + h * Xd[stage - 1];
    }
    const double t = s.t + c[stage] * dt;
    derivatives(*v, *u, *w, k_[3 * stage], k_[3 * stage + 1], k_[3 * stage + 2]);
    Xd[stage] = shift_rhs(*u, t, X);
    Fv[stage] = flux_v(*u);
    Fb[stage] = bar_flux(t, X, Xd[stage]);
  }

  const double w6 = dt / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    s.v[i] += w6 * (k_[0][i] + 2.0 * k_[3][i] + 2.0 * k_[6][i] + k_[9][i]);
    s.u[i] += w6 * (k_[1][i] + 2.0 * k_[4][i] + 2.0 * k_[7][i] + k_[10][i]);
    s.w[i] += w6 * (k_[2][i] + 2.0 * k_[5][i] + 2.0 * k_[8][i] + k_[11][i]);
  }
  s.X += w6 * (Xd[0] + 2.0 * Xd[1] + 2.0 * Xd[2] + Xd[3]);
  s.flux_v += w6 * (Fv[0] + 2.0 * Fv[1] + 2.0 * Fv[2] + Fv[3]);
  s.flux_vbar += w6 * (Fb[0] + 2.0 * Fb[1] + 2.0 * Fb[2] + Fb[3]);
  s.last_Xdot = Xd[0];
  s.t += dt;
  ++s.steps;

  const kernels::FieldBounds b =
      kernels::field_bounds(exps_, {s.v.data(), s.u.data(), s.w.data(), n});
  if (!b.finite) {
    std::ostringstream msg;
    msg << "non-finite field values after step to t = " << s.t;
    throw SolverError(msg.str());
  }
  if (!(b.v_min > config_.vacuum_floor)) {
    std::ostringstream msg;
    msg << "vacuum: v_min = " << b.v_min << " at t = " << s.t;
    throw SolverError(msg.str());
  }
}

double Solver::constraint_defect(const SimState& s) const {
  const kernels::ConstFields in{s.v.data(), s.u.data(), s.w.data(), grid_.n};
  return config_.parallel ? kernels::constraint_defect_parallel(exps_, grid_.dx(), in)
                          : kernels::constraint_defect_serial(exps_, grid_.dx(), in);
}

double Solver::mass_defect(const SimState& s) const {
  const double change = trapezoid_mass(s.v, s.t, s.X) - s.mass0;
  return std::abs(change - (s.flux_v - s.flux_vbar)) / s.mass_scale;
}

} // namespace nsk
