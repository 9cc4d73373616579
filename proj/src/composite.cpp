#include "nsk/composite.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "nsk/errors.hpp"

namespace nsk {

namespace {

constexpr std::size_t kNormCount = 7;
using NormVec = std::array<double, kNormCount>;

NormVec norm_integrands(const CompositeWave& wave, double t, double x, double X) {
  const CompositeSample s = wave.eval_bar(t, x, X);
  const double vSx_vR = s.S.v_x * s.R.v_dev;
  const double vRx_vSx = s.R.v[1] * s.S.v_x;
  const double vRx_vS = s.R.v[1] * s.S.dev_m;
  const double q1i = wave.q1(s).interaction;
  const double q2 = wave.q2(s, 1.0);
  return {std::abs(vSx_vR), vSx_vR * vSx_vR, std::abs(vRx_vSx), vRx_vSx * vRx_vSx,
          vRx_vS * vRx_vS,  q1i * q1i,       q2 * q2};
}

template <class F>
NormVec simpson_vec(F& f, double a, const NormVec& fa, double b, const NormVec& fb, double m,
                    const NormVec& fm, const NormVec& whole, double rel, const NormVec& floor,
                    int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const NormVec flm = f(lm), frm = f(rm);
  NormVec left{}, right{}, both{};
  bool ok = true;
  for (std::size_t i = 0; i < kNormCount; ++i) {
    left[i] = (m - a) / 6.0 * (fa[i] + 4.0 * flm[i] + fm[i]);
    right[i] = (b - m) / 6.0 * (fm[i] + 4.0 * frm[i] + fb[i]);
    both[i] = left[i] + right[i];
    const double tol = std::max(floor[i], rel * std::abs(both[i]));
    if (std::abs(both[i] - whole[i]) > 15.0 * tol) ok = false;
  }
  if (ok || depth <= 0) {
    for (std::size_t i = 0; i < kNormCount; ++i) both[i] += (both[i] - whole[i]) / 15.0;
    return both;
  }
  const NormVec l = simpson_vec(f, a, fa, m, fm, lm, flm, left, rel, floor, depth - 1);
  const NormVec r = simpson_vec(f, m, fm, b, fb, rm, frm, right, rel, floor, depth - 1);
  NormVec out{};
  for (std::size_t i = 0; i < kNormCount; ++i) out[i] = l[i] + r[i];
  return out;
}

} // namespace

CompositeWave::CompositeWave(const GasModel& model, const WavePattern& pattern,
                             const ProfileOptions& profile_opts)
    : model_(model), pattern_(pattern), rarefaction_(model, pattern),
      sqrt_delta_S_(std::sqrt(pattern.delta_S)) {
  if (!pattern.shock_degenerate) profile_.emplace(solve_profile(model, pattern, profile_opts));
}

ProfileSample CompositeWave::shock_at(double xi) const {
  if (profile_) return profile_->eval(xi);
  ProfileSample s;
  s.v = pattern_.mid.v;
  s.u = pattern_.mid.u;
  return s;
}

std::pair<double, double> CompositeWave::weight(double t, double x, double X) const {
  if (!profile_) return {1.0, 0.0};
  const ProfileSample s = profile_->eval(x - pattern_.sigma * t - X);
  const double k = pattern_.sigma / sqrt_delta_S_;
  return {1.0 + k * s.dev_m, k * s.v_x};
}

CompositeSample CompositeWave::eval_bar(double t, double x, double X) const {
  CompositeSample c;
  c.xi = x - pattern_.sigma * t - X;
  c.R = rarefaction_.eval(t, x, 3);
  c.S = shock_at(c.xi);
  const double v_m = pattern_.mid.v, u_m = pattern_.mid.u;
  c.v = v_m + c.R.v_dev + c.S.dev_m;
  if (!(c.v > 0.0)) throw DomainError("composite vacuum: v_bar <= 0");
  c.u = u_m + c.R.u_dev - pattern_.sigma * c.S.dev_m;
  c.v_x = c.R.v[1] + c.S.v_x;
  c.u_x = c.R.u[1] + c.S.u_x;
  c.v_xx = c.R.v[2] + c.S.v_xx;
  c.v_t = c.R.v_t - pattern_.sigma * c.S.v_x;
  const PowerLaw g = model_.capillary_coefficient();
  const double gv = g(c.v);
  c.w = -gv * c.v_x;
  c.w_x = -g.derivative()(c.v) * c.v_x * c.v_x - gv * c.v_xx;
  if (profile_) {
    const double k = pattern_.sigma / sqrt_delta_S_;
    c.a = 1.0 + k * c.S.dev_m;
    c.a_x = k * c.S.v_x;
  }
  return c;
}

Q1Terms CompositeWave::q1(double t, double x, double X) const { return q1(eval_bar(t, x, X)); }

Q1Terms CompositeWave::q1(const CompositeSample& s) const {
  const PowerLaw p = model_.pressure_law();
  const PowerLaw dp = p.derivative();
  const PowerLaw m = model_.viscous_coefficient();
  const PowerLaw dm = m.derivative();
  const PowerLaw D = model_.capillary_square();
  const PowerLaw dD = D.derivative();
  const PowerLaw ddD = dD.derivative();

  const double vR = s.R.v[0], vS = s.S.v, vb = s.v;
  const double dR = s.R.v_dev, dS = s.S.dev_m;
  const double Rx = s.R.v[1], Rxx = s.R.v[2], Rxxx = s.R.v[3];
  const double uRx = s.R.u[1], uRxx = s.R.u[2];
  const double Sx = s.S.v_x, Sxx = s.S.v_xx, Sxxx = s.S.v_xxx;
  const double uSx = s.S.u_x, uSxx = -pattern_.sigma * Sxx;

  // f(v_bar) - f(v^R) and f(v_bar) - f(v^S) without cancellation
  auto dRS = [&](const PowerLaw& f) { return f.difference(vR, dS); };
  auto dSR = [&](const PowerLaw& f) { return f.difference(vS, dR); };

  const double pressure = dRS(dp) * Rx + dSR(dp) * Sx;

  const double viscous = (dRS(dm) * Rx + dm(vb) * Sx) * uRx + dRS(m) * uRxx +
                         (dSR(dm) * Sx + dm(vb) * Rx) * uSx + dSR(m) * uSxx;

  auto cap_part = [&](double dD0, double dD1, double dD2, double Fx, double Fxx, double Fxxx,
                      double Gx) {
    // (Delta_D F_xx)_x + 1/2 (Delta_D' F_x^2)_x for the wave F with partner slope G_x
    const double first = (dD1 * Fx + dD(vb) * Gx) * Fxx + dD0 * Fxxx;
    const double second = (dD2 * Fx + ddD(vb) * Gx) * Fx * Fx + 2.0 * dD1 * Fx * Fxx;
    return first + 0.5 * second;
  };
  const double capR = cap_part(dRS(D), dRS(dD), dRS(ddD), Rx, Rxx, Rxxx, Sx);
  const double capS = cap_part(dSR(D), dSR(dD), dSR(ddD), Sx, Sxx, Sxxx, Rx);
  const double cross = ddD(vb) * s.v_x * Rx * Sx + dD(vb) * (Rxx * Sx + Rx * Sxx);
  const double capillary_x = -capR - capS - cross;

  Q1Terms q;
  q.interaction = pressure - viscous - capillary_x;
  q.rarefaction = -(dm(vR) * Rx * uRx + m(vR) * uRxx) +
                  (D(vR) * Rxxx + 2.0 * dD(vR) * Rx * Rxx + 0.5 * ddD(vR) * Rx * Rx * Rx);
  return q;
}

double CompositeWave::q2(double t, double x, double X, double Xdot) const {
  return q2(eval_bar(t, x, X), Xdot);
}

double CompositeWave::q2(const CompositeSample& s, double Xdot) const {
  if (Xdot == 0.0) return 0.0;
  const PowerLaw g = model_.capillary_coefficient();
  const PowerLaw dg = g.derivative();
  const double dR = s.R.v_dev;
  const double Sx = s.S.v_x;
  const double bracket_x =
      (dg.difference(s.S.v, dR) * Sx + dg(s.v) * s.R.v[1]) * Sx + g.difference(s.S.v, dR) * s.S.v_xx;
  return Xdot * bracket_x;
}

std::pair<double, double> CompositeWave::window(double t, double X) const {
  auto [lo, hi] = rarefaction_.support(t);
  if (profile_) {
    const double shift = pattern_.sigma * t + X;
    lo = std::min(lo, shift + profile_->xi_min());
    hi = std::max(hi, shift + profile_->xi_max());
  }
  return {lo, hi};
}

InteractionNorms CompositeWave::interaction_norms(double t, double X) const {
  InteractionNorms out;
  out.t = t;
  if (rarefaction_.degenerate() || !profile_) return out;
  const auto [lo, hi] = window(t, X);
  auto f = [&](double x) { return norm_integrands(*this, t, x, X); };
  const double panel = 1.0;
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / panel));
  const double h = (hi - lo) / static_cast<double>(n);
  std::vector<double> nodes(2 * n + 1);
  for (std::size_t i = 0; i <= 2 * n; ++i) nodes[i] = lo + 0.5 * h * static_cast<double>(i);
  nodes.back() = hi;
  std::vector<NormVec> vals(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) vals[i] = f(nodes[i]);
  // coarse pass sets an absolute floor so negligible panels stop refining
  NormVec coarse{}, floor{};
  std::vector<NormVec> whole(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = nodes[2 * i], b = nodes[2 * i + 2];
    for (std::size_t k = 0; k < kNormCount; ++k) {
      whole[i][k] = (b - a) / 6.0 * (vals[2 * i][k] + 4.0 * vals[2 * i + 1][k] + vals[2 * i + 2][k]);
      coarse[k] += std::abs(whole[i][k]);
    }
  }
  for (std::size_t k = 0; k < kNormCount; ++k)
    floor[k] = std::max(1e-300, 1e-12 * coarse[k] / static_cast<double>(n));
  NormVec sum{};
  for (std::size_t i = 0; i < n; ++i) {
    const NormVec part = simpson_vec(f, nodes[2 * i], vals[2 * i], nodes[2 * i + 2],
                                     vals[2 * i + 2], nodes[2 * i + 1], vals[2 * i + 1], whole[i],
                                     1e-9, floor, 20);
    for (std::size_t k = 0; k < kNormCount; ++k) sum[k] += part[k];
  }
  out.vSx_vR_L1 = sum[0];
  out.vSx_vR_L2 = std::sqrt(sum[1]);
  out.vRx_vSx_L1 = sum[2];
  out.vRx_vSx_L2 = std::sqrt(sum[3]);
  out.vRx_vS_L2 = std::sqrt(sum[4]);
  out.Q1I_L2 = std::sqrt(sum[5]);
  out.Q2_L2 = std::sqrt(sum[6]);
  return out;
}

} // namespace nsk
