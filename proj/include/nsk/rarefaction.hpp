#pragma once

#include <array>
#include <vector>

#include "nsk/riemann.hpp"
#include "nsk/thermo.hpp"

namespace nsk {

/// Value and x-derivatives (index = order) of v^R and u^R at one point, plus the
/// Burgers field they are built from.
struct RarefactionSample {
  std::array<double, 5> v{};
  std::array<double, 5> u{};
  std::array<double, 5> w{};  // w, w_x, ..., w_xxxx
  double v_dev = 0.0;         // v^R - v_m without cancellation
  double u_dev = 0.0;         // u^R - u_m without cancellation
  double v_t = 0.0;
  double u_t = 0.0;
  double x0 = 0.0;
};

/// Lebesgue norms of the x-derivatives of (v^R, u^R); index = derivative order, entry 0 unused.
struct RarefactionNorms {
  double p = 2.0;  // exponent, infinity for the sup norm
  std::array<double, 5> v{};
  std::array<double, 5> u{};
  std::array<double, 5> w{};
};

/// Smooth 1-rarefaction from the Burgers solution with data
/// w0(x) = (w_m + w_-)/2 + (w_m - w_-)/2 tanh x, evaluated at time 1 + t.
class RarefactionWave {
public:
  RarefactionWave(const GasModel& model, const WavePattern& pattern);

  double w_minus() const { return w_minus_; }
  double w_m() const { return w_m_; }
  double delta_R() const { return delta_R_; }
  bool degenerate() const { return degenerate_; }
  const GasModel& model() const { return model_; }

  struct BurgersState {
    double w;
    double x0;
  };
  /// Solves x = x0 + w0(x0) tau for x0. `tau` is the Burgers time (1 + t for the wave).
  BurgersState burgers_state(double tau, double x) const;

  /// Fields and x-derivatives up to `order` (<= 4) at physical time t.
  RarefactionSample eval(double t, double x, int order = 4) const;
  /// Same as eval, parametrized by the characteristic foot x0 instead of x.
  RarefactionSample eval_foot(double t, double x0, int order = 4) const;
  /// (v^R - v_m, u^R - u_m) only; the cheap path used inside time stepping.
  std::pair<double, double> deviations(double t, double x) const;
  /// Position x reached at time t by the characteristic leaving x0.
  double position(double t, double x0) const { return x0 + w0(x0) * (1.0 + t); }

  /// [lo, hi] in x outside which the wave is flat to roundoff at time t.
  std::pair<double, double> support(double t) const;

  /// L^p norms of derivatives 1..4 at time t (p = infinity allowed).
  RarefactionNorms derivative_norms(double t, double p) const;

  double w0(double x0) const;

private:
  GasModel model_;
  EndState left_, mid_;
  double w_minus_, w_m_, delta_R_;
  double center_, amp_;
  bool degenerate_;
  // v = cv * s^av, u = u_m + cu * (s_m^eu - s^eu) with s = -w
  double cv_, av_, cu_, eu_, s_m_;
};

} // namespace nsk
