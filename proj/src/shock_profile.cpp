#include "nsk/shock_profile.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "nsk/errors.hpp"

namespace nsk {

namespace {

using State = std::array<double, 2>;

struct ProfileOde {
  double sigma, v_m;
  PowerLaw p, m, D;

  // v'' as a function of (v - v_m, v')
  double accel(double y, double yp) const {
    const double v = v_m + y;
    const double F = sigma * sigma * y + p.difference(v_m, y);
    const double N = F + sigma * m(v) * yp + 0.5 * D.derivative()(v) * yp * yp;
    return -N / D(v);
  }

  double jerk(double y, double yp, double ypp) const {
    const double v = v_m + y;
    const PowerLaw dp = p.derivative(), dm = m.derivative(), dD = D.derivative();
    const PowerLaw ddD = dD.derivative();
    const double Dv = D(v), dDv = dD(v);
    const double Nv = sigma * sigma + dp(v) + sigma * dm(v) * yp + 0.5 * ddD(v) * yp * yp;
    const double Hv = -Nv / Dv - ypp * dDv / Dv;
    const double Hvp = -(sigma * m(v) + dDv * yp) / Dv;
    return Hv * yp + Hvp * ypp;
  }

  State rhs(const State& s) const { return {s[1], accel(s[0], s[1])}; }
};

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
  State y;
  State k_end;
  double err;
};

StepResult dopri_step(const ProfileOde& ode, const State& y, const State& k1, double h, double rtol,
                      const State& atol) {
  auto comb = [&](std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (auto [c, k] : terms)
      for (int i = 0; i < 2; ++i) out[i] += h * c * (*k)[i];
    return out;
  };
  const State k2 = ode.rhs(comb({{a21, &k1}}));
  const State k3 = ode.rhs(comb({{a31, &k1}, {a32, &k2}}));
  const State k4 = ode.rhs(comb({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const State k5 = ode.rhs(comb({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const State k6 = ode.rhs(comb({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  const State y5 = comb({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  const State k7 = ode.rhs(y5);
  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double e =
        h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    const double sc = atol[i] + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
    err = std::max(err, std::abs(e) / sc);
  }
  return {y5, k7, err};
}

// Cubic Hermite on [0, h] with values f0, f1 and slopes d0, d1, evaluated at s = xi - xi0.
struct Hermite {
  double f0, f1, d0, d1, h;
  double value(double s) const {
    const double t = s / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * f1 +
           (t3 - t2) * h * d1;
  }
  double slope(double s) const {
    const double t = s / h;
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * (f0 - f1)) / h + (3 * t2 - 4 * t + 1) * d0 + (3 * t2 - 2 * t) * d1;
  }
};

} // namespace

double profile_residual(const GasModel& model, const WavePattern& pattern, double v, double vp,
                        double vpp) {
  check_volume(v, "profile_residual");
  const double s = pattern.sigma;
  const double y = v - pattern.mid.v;
  const PowerLaw p = model.pressure_law();
  const PowerLaw D = model.capillary_square();
  const double F = s * s * y + p.difference(pattern.mid.v, y);
  return F + s * model.viscous_coefficient()(v) * vp + 0.5 * D.derivative()(v) * vp * vp +
         D(v) * vpp;
}

ShockProfile::ShockProfile(const GasModel& model, const WavePattern& pattern,
                           std::vector<double> xi, std::vector<double> y, std::vector<double> yp,
                           std::vector<double> ypp, double rate_left, double rate_right)
    : model_(model), pattern_(pattern), xi_(std::move(xi)), y_(std::move(y)),
      yp_(std::move(yp)), ypp_(std::move(ypp)), sigma_(pattern.sigma), v_m_(pattern.mid.v),
      u_m_(pattern.mid.u), v_plus_(pattern.right.v), delta_S_(pattern.delta_S),
      rate_left_(rate_left), rate_right_(rate_right) {}

std::pair<double, double> ShockProfile::closure(double v, double vp) const {
  const ProfileOde ode{sigma_, v_m_, model_.pressure_law(), model_.viscous_coefficient(),
                       model_.capillary_square()};
  const double y = v - v_m_;
  const double a = ode.accel(y, vp);
  return {a, ode.jerk(y, vp, a)};
}

ProfileSample ShockProfile::assemble(double y, double yp, double ypp, double yppp) const {
  ProfileSample s;
  s.dev_m = y;
  s.dev_plus = delta_S_ - y;
  s.v = v_m_ + y;
  s.u = u_m_ - sigma_ * y;
  s.v_x = yp;
  s.u_x = -sigma_ * yp;
  s.v_xx = ypp;
  s.v_xxx = yppp;
  const PowerLaw g = model_.capillary_coefficient();
  const double gv = g(s.v);
  s.w = -gv * yp;
  s.w_x = -g.derivative()(s.v) * yp * yp - gv * ypp;
  return s;
}

ProfileSample ShockProfile::eval(double xi) const {
  const ProfileOde ode{sigma_, v_m_, model_.pressure_law(), model_.viscous_coefficient(),
                       model_.capillary_square()};
  if (xi <= xi_.front()) {
    const double e = std::exp(rate_left_ * (xi - xi_.front()));
    const double y = y_.front() * e;
    const double yp = yp_.front() * e;
    const double ypp = rate_left_ * yp;
    return assemble(y, yp, ypp, rate_left_ * ypp);
  }
  if (xi >= xi_.back()) {
    const double e = std::exp(rate_right_ * (xi - xi_.back()));
    const double d = (delta_S_ - y_.back()) * e;
    const double yp = yp_.back() * e;
    const double ypp = rate_right_ * yp;
    return assemble(delta_S_ - d, yp, ypp, rate_right_ * ypp);
  }
  const auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
  const std::size_t i = static_cast<std::size_t>(it - xi_.begin()) - 1;
  const double h = xi_[i + 1] - xi_[i];
  const double s = xi - xi_[i];
  const double y = Hermite{y_[i], y_[i + 1], yp_[i], yp_[i + 1], h}.value(s);
  const double yp = Hermite{yp_[i], yp_[i + 1], ypp_[i], ypp_[i + 1], h}.value(s);
  const double ypp = ode.accel(y, yp);
  return assemble(y, yp, ypp, ode.jerk(y, yp, ypp));
}

double ShockProfile::interpolated_vxx(double xi) const {
  if (xi <= xi_.front() || xi >= xi_.back()) return eval(xi).v_xx;
  const auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
  const std::size_t i = static_cast<std::size_t>(it - xi_.begin()) - 1;
  const double h = xi_[i + 1] - xi_[i];
  return Hermite{yp_[i], yp_[i + 1], ypp_[i], ypp_[i + 1], h}.slope(xi - xi_[i]);
}

ShockProfile solve_profile(const GasModel& model, const WavePattern& pattern,
                           const ProfileOptions& opts) {
  const double dS = pattern.delta_S;
  if (pattern.shock_degenerate || !(dS > kDegenerateStrength))
    throw ProfileError("profile solve failed: degenerate shock strength");
  const double v_m = pattern.mid.v, v_p = pattern.right.v, sigma = pattern.sigma;
  const ProfileOde ode{sigma, v_m, model.pressure_law(), model.viscous_coefficient(),
                       model.capillary_square()};

  // Linearizations: lambda^2 + b lambda + c = 0 at both ends.
  auto roots = [&](double v) {
    const double D = ode.D(v);
    const double b = sigma * ode.m(v) / D;
    const double c = (sigma * sigma + model.pressure_d(v)) / D;
    return std::pair{b, c};
  };
  const auto [b_m, c_m] = roots(v_m);
  if (!(c_m < 0.0)) throw ProfileError("profile solve failed: v_m is not a saddle");
  const double lam_u = -2.0 * c_m / (b_m + std::sqrt(b_m * b_m - 4.0 * c_m));
  const auto [b_p, c_p] = roots(v_p);
  if (!(c_p > 0.0)) throw ProfileError("profile solve failed: v_+ is not attracting");
  const double disc = b_p * b_p - 4.0 * c_p;
  if (disc < 0.0)
    throw ProfileError("monotonicity violated: v_+ is a focus, the profile oscillates");
  const double lam_s = -2.0 * c_p / (b_p + std::sqrt(disc));

  const double h_max = std::min(0.1, 0.01 / dS);
  const double rtol = opts.rtol;
  const double eps = opts.start_fraction * dS;
  const State atol{1e-14 * dS, 1e-14 * dS * lam_u};
  const double stop = opts.end_fraction * dS;

  std::vector<double> xs{0.0}, ys{eps}, yps{lam_u * eps}, ypps;
  State y{eps, lam_u * eps};
  State k = ode.rhs(y);
  ypps.push_back(k[1]);
  double x = 0.0;
  double h = std::min(h_max, 0.01 / lam_u);
  constexpr std::size_t kMaxSteps = 5'000'000;
  std::size_t rejected = 0;
  while (dS - y[0] >= stop) {
    if (xs.size() + rejected > kMaxSteps) {
      std::ostringstream msg;
      msg << "profile solve failed: step limit reached at v - v_m in [" << y[0] << ", " << dS
          << "]";
      throw ProfileError(msg.str());
    }
    const StepResult r = dopri_step(ode, y, k, h, rtol, atol);
    if (!std::isfinite(r.err)) throw ProfileError("profile solve failed: non-finite state");
    if (r.err > 1.0) {
      ++rejected;
      h *= std::max(0.2, 0.9 * std::pow(r.err, -0.2));
      if (h < 1e-12) throw ProfileError("profile solve failed: step size underflow");
      continue;
    }
    x += h;
    y = r.y;
    k = r.k_end;
    if (!(y[1] > 0.0) || y[0] > dS) {
      std::ostringstream msg;
      msg << "monotonicity violated at xi = " << x << " (v - v_m = " << y[0] << ", v' = " << y[1]
          << ")";
      throw ProfileError(msg.str());
    }
    xs.push_back(x);
    ys.push_back(y[0]);
    yps.push_back(y[1]);
    ypps.push_back(k[1]);
    const double grow = r.err > 0.0 ? 0.9 * std::pow(r.err, -0.2) : 5.0;
    h = std::min(h_max, h * std::clamp(grow, 0.2, 5.0));
  }

  // Shift so that v(0) is the midpoint.
  const double half = 0.5 * dS;
  const auto it = std::upper_bound(ys.begin(), ys.end(), half);
  if (it == ys.begin() || it == ys.end())
    throw ProfileError("profile solve failed: midpoint not bracketed");
  const std::size_t i = static_cast<std::size_t>(it - ys.begin()) - 1;
  const Hermite cell{ys[i], ys[i + 1], yps[i], yps[i + 1], xs[i + 1] - xs[i]};
  double lo = 0.0, hi = cell.h, s = 0.5 * cell.h;
  for (int iter = 0; iter < 100; ++iter) {
    const double f = cell.value(s) - half;
    if (std::abs(f) < 1e-15 * dS) break;
    (f > 0.0 ? hi : lo) = s;
    double next = s - f / cell.slope(s);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    s = next;
  }
  const double x_mid = xs[i] + s;
  for (double& xv : xs) xv -= x_mid;

  return ShockProfile(model, pattern, std::move(xs), std::move(ys), std::move(yps),
                      std::move(ypps), lam_u, lam_s);
}

} // namespace nsk
