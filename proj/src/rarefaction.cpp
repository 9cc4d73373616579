#include "nsk/rarefaction.hpp"

#include <algorithm>
#include <cmath>

#include "nsk/errors.hpp"
#include "nsk/quadrature.hpp"

namespace nsk {

namespace {

struct Tanh {
  double t;     // tanh x0
  double sech2; // sech^2 x0, accurate in the tails
  double dev;   // 1 - tanh x0 = 2/(1 + e^{2 x0})
};

Tanh tanh_parts(double x0) {
  const double e = std::exp(-2.0 * std::abs(x0));
  const double t = std::tanh(x0);
  const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
  const double one_minus = x0 >= 0.0 ? 2.0 * e / (1.0 + e) : 2.0 / (1.0 + e);
  return {t, sech2, one_minus};
}

// Derivatives of c s^a with respect to w = -s: c (-1)^k a (a-1) ... (a-k+1) s^(a-k).
std::array<double, 5> power_in_w(double c, double a, double s) {
  std::array<double, 5> d{};
  double term = c * std::pow(s, a);
  const double inv_s = 1.0 / s;
  for (int k = 0; k < 5; ++k) {
    d[k] = term;
    term *= -(a - k) * inv_s;
  }
  return d;
}

// Faa di Bruno up to order 4 for f(w(x)), with f derivatives fw and w derivatives wx.
std::array<double, 5> compose(const std::array<double, 5>& fw, const std::array<double, 5>& wx,
                              int order) {
  std::array<double, 5> out{};
  out[0] = fw[0];
  const double w1 = wx[1], w2 = wx[2], w3 = wx[3], w4 = wx[4];
  if (order >= 1) out[1] = fw[1] * w1;
  if (order >= 2) out[2] = fw[2] * w1 * w1 + fw[1] * w2;
  if (order >= 3) out[3] = fw[3] * w1 * w1 * w1 + 3.0 * fw[2] * w1 * w2 + fw[1] * w3;
  if (order >= 4)
    out[4] = fw[4] * w1 * w1 * w1 * w1 + 6.0 * fw[3] * w1 * w1 * w2 +
             fw[2] * (3.0 * w2 * w2 + 4.0 * w1 * w3) + fw[1] * w4;
  return out;
}

} // namespace

RarefactionWave::RarefactionWave(const GasModel& model, const WavePattern& pattern)
    : model_(model), left_(pattern.left), mid_(pattern.mid) {
  const double g = model.gamma();
  w_minus_ = model.lambda1(pattern.left.v);
  w_m_ = model.lambda1(pattern.mid.v);
  delta_R_ = pattern.delta_R;
  degenerate_ = pattern.rarefaction_degenerate;
  if (degenerate_) w_minus_ = w_m_;
  center_ = 0.5 * (w_m_ + w_minus_);
  amp_ = 0.5 * (w_m_ - w_minus_);
  cv_ = std::pow(g, 1.0 / (g + 1.0));
  av_ = -2.0 / (g + 1.0);
  eu_ = (g - 1.0) / (g + 1.0);
  const double lambda_coeff = 2.0 * std::sqrt(g) / (g - 1.0);
  cu_ = lambda_coeff * std::pow(cv_, 0.5 * (1.0 - g));
  s_m_ = -w_m_;
}

double RarefactionWave::w0(double x0) const { return center_ + amp_ * std::tanh(x0); }

RarefactionWave::BurgersState RarefactionWave::burgers_state(double tau, double x) const {
  if (!std::isfinite(tau) || !std::isfinite(x)) throw DomainError("burgers_state: non-finite input");
  if (tau < 0.0) throw DomainError("burgers_state: negative time");
  if (degenerate_ || amp_ == 0.0) return {w_m_, x - w_m_ * tau};
  double lo = x - w_m_ * tau;
  double hi = x - w_minus_ * tau;
  const double tol = 1e-13 * std::max(1.0, std::abs(x));
  // far outside the fan the foot is almost exactly the free-streaming one
  double guess = x - center_ * tau;
  if (lo > 20.0) guess = lo;
  if (hi < -20.0) guess = hi;
  double x0 = std::clamp(guess, lo, hi);
  for (int it = 0; it < 50; ++it) {
    const Tanh th = tanh_parts(x0);
    const double h = x0 + (center_ + amp_ * th.t) * tau - x;
    if (std::abs(h) <= tol) return {center_ + amp_ * th.t, x0};
    (h > 0.0 ? hi : lo) = x0;
    double next = x0 - h / (1.0 + amp_ * th.sech2 * tau);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x0 = next;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    x0 = 0.5 * (lo + hi);
    const double h = x0 + w0(x0) * tau - x;
    if (std::abs(h) <= tol) break;
    (h > 0.0 ? hi : lo) = x0;
  }
  return {w0(x0), x0};
}

RarefactionSample RarefactionWave::eval_foot(double t, double x0, int order) const {
  if (order < 0 || order > 4) throw DomainError("rarefaction eval: order must lie in 0..4");
  RarefactionSample r;
  r.x0 = x0;
  if (degenerate_) {
    r.v[0] = mid_.v;
    r.u[0] = mid_.u;
    r.w[0] = w_m_;
    return r;
  }
  const double tau = 1.0 + t;
  const Tanh th = tanh_parts(x0);
  const double A = amp_;
  const double T = th.t, S = th.sech2;
  const double d1 = A * S;
  const double d2 = -2.0 * A * T * S;
  const double d3 = -2.0 * A * S * (1.0 - 3.0 * T * T);
  const double d4 = -2.0 * A * S * (-8.0 * T + 12.0 * T * T * T);
  const double J = 1.0 / (1.0 + d1 * tau);
  const double J2 = J * J, J3 = J2 * J, J4 = J3 * J, J5 = J4 * J;

  const double w = center_ + A * T;
  r.w[0] = w;
  r.w[1] = d1 * J;
  r.w[2] = d2 * J3;
  r.w[3] = d3 * J4 - 3.0 * tau * d2 * d2 * J5;
  r.w[4] = d4 * J5 - 10.0 * tau * d2 * d3 * J5 * J + 15.0 * tau * tau * d2 * d2 * d2 * J5 * J2;

  // s - s_m = -(w - w_m) = A (1 - tanh x0)
  const double ds = A * th.dev;
  const double s = s_m_ + ds;
  r.v_dev = cv_ * power_difference(s_m_, ds, av_);
  r.u_dev = -cu_ * power_difference(s_m_, ds, eu_);

  auto fv = power_in_w(cv_, av_, s);
  auto fu = power_in_w(-cu_, eu_, s);
  r.v = compose(fv, r.w, order);
  r.u = compose(fu, r.w, order);
  r.v[0] = mid_.v + r.v_dev;
  r.u[0] = mid_.u + r.u_dev;
  if (order < 4)
    for (int k = order + 1; k < 5; ++k) r.w[k] = 0.0;
  r.v_t = -w * r.v[1];
  r.u_t = -w * r.u[1];
  return r;
}

RarefactionSample RarefactionWave::eval(double t, double x, int order) const {
  if (t < 0.0) throw DomainError("rarefaction eval: negative time");
  const BurgersState b = burgers_state(1.0 + t, x);
  return eval_foot(t, b.x0, order);
}

std::pair<double, double> RarefactionWave::deviations(double t, double x) const {
  if (degenerate_) return {0.0, 0.0};
  const BurgersState b = burgers_state(1.0 + t, x);
  const double ds = amp_ * tanh_parts(b.x0).dev;
  return {cv_ * power_difference(s_m_, ds, av_), -cu_ * power_difference(s_m_, ds, eu_)};
}

std::pair<double, double> RarefactionWave::support(double t) const {
  return {position(t, -40.0), position(t, 40.0)};
}

RarefactionNorms RarefactionWave::derivative_norms(double t, double p) const {
  RarefactionNorms n;
  n.p = p;
  if (degenerate_) return n;
  const double tau = 1.0 + t;
  constexpr double kFoot = 40.0;
  if (std::isinf(p)) {
    auto abs_at = [&](double x0, int kind, int k) {
      const RarefactionSample r = eval_foot(t, x0, 4);
      const auto& f = kind == 0 ? r.v : (kind == 1 ? r.u : r.w);
      return std::abs(f[k]);
    };
    const double h = 0.005;
    const int steps = static_cast<int>(2.0 * kFoot / h);
    std::array<std::array<double, 5>, 3> best{}, best_x{};
    for (int i = 0; i <= steps; ++i) {
      const double x0 = -kFoot + h * i;
      const RarefactionSample r = eval_foot(t, x0, 4);
      const std::array<const std::array<double, 5>*, 3> f{&r.v, &r.u, &r.w};
      for (int kind = 0; kind < 3; ++kind)
        for (int k = 1; k <= 4; ++k)
          if (std::abs((*f[kind])[k]) > best[kind][k]) {
            best[kind][k] = std::abs((*f[kind])[k]);
            best_x[kind][k] = x0;
          }
    }
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int kind = 0; kind < 3; ++kind) {
      for (int k = 1; k <= 4; ++k) {
        // golden-section polish around the best sample
        double a = best_x[kind][k] - h, b = best_x[kind][k] + h;
        for (int it = 0; it < 40; ++it) {
          const double c = b - phi * (b - a), d = a + phi * (b - a);
          if (abs_at(c, kind, k) > abs_at(d, kind, k))
            b = d;
          else
            a = c;
        }
        const double polished = std::max(best[kind][k], abs_at(0.5 * (a + b), kind, k));
        (kind == 0 ? n.v : (kind == 1 ? n.u : n.w))[k] = polished;
      }
    }
    return n;
  }
  for (int kind = 0; kind < 3; ++kind) {
    for (int k = 1; k <= 4; ++k) {
      auto integrand = [&](double x0) {
        const RarefactionSample r = eval_foot(t, x0, k);
        const auto& f = kind == 0 ? r.v : (kind == 1 ? r.u : r.w);
        const double jac = 1.0 + amp_ * tanh_parts(x0).sech2 * tau;
        return std::pow(std::abs(f[k]), p) * jac;
      };
      const double integral = quad::panel_simpson(integrand, -kFoot, kFoot, 0.5, 1e-11);
      (kind == 0 ? n.v : (kind == 1 ? n.u : n.w))[k] = std::pow(integral, 1.0 / p);
    }
  }
  return n;
}

} // namespace nsk
