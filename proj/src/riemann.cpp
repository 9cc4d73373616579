#include "nsk/riemann.hpp"

#include <cmath>
#include <sstream>

#include "nsk/errors.hpp"
#include "nsk/format.hpp"

namespace nsk {

double rarefaction_curve_u(const GasModel& model, double v, const EndState& anchor) {
  check_volume(v, "rarefaction_curve_u");
  check_volume(anchor.v, "rarefaction_curve_u");
  if (v > anchor.v) throw DomainError("rarefaction_curve_u: v above the anchor volume");
  const double g = model.gamma();
  // Lambda(v) - Lambda(v_anchor), with Lambda the antiderivative of lambda1
  const PowerLaw lambda_anti{2.0 * std::sqrt(g) / (g - 1.0), 0.5 * (1.0 - g)};
  return anchor.u - lambda_anti.difference(anchor.v, v - anchor.v);
}

double shock_speed(const GasModel& model, double v, double v_plus) {
  check_volume(v, "shock_speed");
  check_volume(v_plus, "shock_speed");
  if (v == v_plus) return std::sqrt(-model.pressure_d(v_plus));
  const double jump = model.pressure_law().difference(v_plus, v - v_plus); // p(v) - p(v+)
  return std::sqrt(jump / (v_plus - v));
}

std::pair<double, double> shock_curve(const GasModel& model, double v, const EndState& right) {
  check_volume(v, "shock_curve");
  if (!(v < right.v)) throw DomainError("shock_curve: v must lie below the right volume");
  const double sigma = shock_speed(model, v, right.v);
  return {right.u + sigma * (right.v - v), sigma};
}

namespace {

// g(v) = z1(v, u_S(v)) - z1(left), decreasing in v.
struct IntermediateResidual {
  const GasModel& model;
  EndState right;
  double z_left;

  double u_shock(double v) const {
    return right.u + shock_speed(model, v, right.v) * (right.v - v);
  }
  double operator()(double v) const { return model.riemann_invariant_z1(v, u_shock(v)) - z_left; }
  double derivative(double v) const {
    const double s = shock_speed(model, v, right.v);
    return model.lambda1(v) + (model.pressure_d(v) - s * s) / (2.0 * s);
  }
};

WavePattern fill_pattern(const GasModel& model, const EndState& left, const EndState& mid,
                         const EndState& right, const PatternOptions& opts) {
  WavePattern w;
  w.left = left;
  w.mid = mid;
  w.right = right;
  w.sigma = shock_speed(model, mid.v, right.v);
  w.delta_R = std::abs(mid.u - left.u);
  w.delta_S = std::abs(right.v - mid.v);
  w.delta_R_volume = std::abs(mid.v - left.v);
  w.delta_S_velocity = std::abs(right.u - mid.u);
  w.rarefaction_degenerate = w.delta_R < kDegenerateStrength;
  w.shock_degenerate = w.delta_S < kDegenerateStrength;
  const double g = model.gamma();
  const double pm = model.pressure(mid.v);
  w.sigma_m = std::sqrt(-model.pressure_d(mid.v));
  w.alpha_m = (g + 1.0) / (2.0 * g * w.sigma_m * pm);
  w.M = 5.0 * w.sigma_m * w.sigma_m * w.sigma_m * w.alpha_m / 4.0;
  w.C1 = 0.5 * (1.0 / w.sigma_m - std::sqrt(w.delta_S) * (g + 1.0) / (g * pm));
  if (w.delta_R > opts.strength_cap || w.delta_S > opts.strength_cap) {
    std::ostringstream msg;
    msg << "pattern exceeds strength cap " << opts.strength_cap << " (delta_R=" << w.delta_R
        << ", delta_S=" << w.delta_S << ")";
    throw PatternError(msg.str());
  }
  return w;
}

} // namespace

WavePattern solve_intermediate_state(const GasModel& model, const EndState& left,
                                     const EndState& right, const PatternOptions& opts) {
  check_volume(left.v, "solve_intermediate_state");
  check_volume(right.v, "solve_intermediate_state");
  const IntermediateResidual g{model, right, model.riemann_invariant_z1(left.v, left.u)};
  const double scale = std::max(1.0, std::abs(g.z_left));

  double v_m = right.v;
  const double g_plus = g(right.v);
  if (std::abs(g_plus) <= 1e-14 * scale) {
    v_m = right.v;
  } else if (g_plus > 0.0) {
    throw PatternError("pattern not R1S2: no intermediate state below the right volume");
  } else {
    double hi = right.v;
    double lo = 0.5 * right.v;
    while (g(lo) <= 0.0) {
      hi = lo;
      lo *= 0.5;
      if (lo < kVolumeFloor) throw PatternError("pattern not R1S2: root bracket reached vacuum");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-6 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) > 0.0 ? lo : hi) = mid;
    }
    double v = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
      const double gv = g(v);
      if (gv == 0.0) break;
      (gv > 0.0 ? lo : hi) = v;
      const double step = gv / g.derivative(v);
      double next = v - step;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      const bool done = std::abs(next - v) < 1e-14 * v;
      v = next;
      if (done && std::abs(g(v)) < 1e-12) break;
    }
    v_m = v;
    if (std::abs(g(v_m)) > 1e-12 * scale)
      throw PatternError("intermediate state solve did not converge");
  }

  if (left.v > v_m * (1.0 + 1e-12))
    throw PatternError("left state not on rarefaction side (v_- >= v_m)");

  const EndState mid{v_m, v_m < right.v ? g.u_shock(v_m) : right.u};
  return fill_pattern(model, left, mid, right, opts);
}

double left_volume_for_strength(const GasModel& model, const EndState& mid, double delta_R) {
  if (delta_R < 0.0) throw DomainError("rarefaction strength must be non-negative");
  const double g = model.gamma();
  const double lambda = model.lambda1_antiderivative(mid.v) + delta_R;
  return std::pow(lambda * (g - 1.0) / (2.0 * std::sqrt(g)), 2.0 / (1.0 - g));
}

WavePattern construct_pattern(const GasModel& model, const EndState& right, double v_m,
                              double v_minus, const PatternOptions& opts) {
  check_volume(v_m, "construct_pattern");
  if (v_m > right.v) throw PatternError("intermediate volume above the right volume");
  const EndState mid{v_m, v_m < right.v ? shock_curve(model, v_m, right).first : right.u};
  const EndState left{v_minus, rarefaction_curve_u(model, v_minus, mid)};
  return solve_intermediate_state(model, left, right, opts);
}

std::string format_pattern(const WavePattern& w) {
  std::ostringstream out;
  auto kv = [&](const char* key, double value) { out << key << " = " << format_double(value) << '\n'; };
  kv("v_minus", w.left.v);
  kv("u_minus", w.left.u);
  kv("v_m", w.mid.v);
  kv("u_m", w.mid.u);
  kv("v_plus", w.right.v);
  kv("u_plus", w.right.u);
  kv("sigma", w.sigma);
  kv("delta_R", w.delta_R);
  kv("delta_S", w.delta_S);
  kv("delta_R_volume", w.delta_R_volume);
  kv("delta_S_velocity", w.delta_S_velocity);
  kv("sigma_m", w.sigma_m);
  kv("alpha_m", w.alpha_m);
  kv("M", w.M);
  kv("C1", w.C1);
  out << "rarefaction_degenerate = " << (w.rarefaction_degenerate ? "true" : "false") << '\n';
  out << "shock_degenerate = " << (w.shock_degenerate ? "true" : "false") << '\n';
  return out.str();
}

} // namespace nsk
