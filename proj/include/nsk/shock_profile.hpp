#pragma once

#include <vector>

#include "nsk/riemann.hpp"
#include "nsk/thermo.hpp"

namespace nsk {

/// Profile fields and xi-derivatives at one point.
struct ProfileSample {
  double v = 0.0, u = 0.0, w = 0.0;
  double v_x = 0.0, u_x = 0.0, w_x = 0.0;
  double v_xx = 0.0, v_xxx = 0.0;
  double dev_m = 0.0;    // v - v_m
  double dev_plus = 0.0; // v_+ - v
};

struct ProfileOptions {
  double rtol = 1e-11;
  /// Fraction of delta_S at which the orbit is declared to have reached v_+.
  double end_fraction = 1e-10;
  /// Initial offset from v_m along the unstable eigenvector, as a fraction of delta_S.
  double start_fraction = 1e-8;
};

/// Left-hand side of the once-integrated profile equation,
/// sigma^2 (v - v_m) + p(v) - p(v_m) + sigma mu(v) v'/v + g g'(v) v'^2 + g(v)^2 v''
/// with g = sqrt(kappa)/v^(5/2).
double profile_residual(const GasModel& model, const WavePattern& pattern, double v, double vp,
                        double vpp);

/// Viscous-dispersive 2-shock traveling wave, tabulated on the integrator's accepted steps
/// and continued by its linearized exponential tails.
class ShockProfile {
public:
  ShockProfile(const GasModel& model, const WavePattern& pattern, std::vector<double> xi,
               std::vector<double> y, std::vector<double> yp, std::vector<double> ypp,
               double rate_left, double rate_right);

  ProfileSample eval(double xi) const;

  /// v'' from differentiating the interpolant of v' (independent of the ODE closure).
  double interpolated_vxx(double xi) const;

  const std::vector<double>& xi() const { return xi_; }
  /// v - v_m at the nodes.
  const std::vector<double>& dev() const { return y_; }
  /// v' at the nodes.
  const std::vector<double>& slope() const { return yp_; }
  double xi_min() const { return xi_.front(); }
  double xi_max() const { return xi_.back(); }
  double sigma() const { return sigma_; }
  double v_m() const { return v_m_; }
  double u_m() const { return u_m_; }
  double v_plus() const { return v_plus_; }
  double delta_S() const { return delta_S_; }
  /// Growth rate of v - v_m as xi -> -infinity (> 0).
  double rate_left() const { return rate_left_; }
  /// Decay rate of v_+ - v as xi -> +infinity (< 0).
  double rate_right() const { return rate_right_; }
  const GasModel& model() const { return model_; }
  const WavePattern& pattern() const { return pattern_; }

  /// v'' and v''' from the profile ODE at (v, v').
  std::pair<double, double> closure(double v, double vp) const;

private:
  ProfileSample assemble(double y, double yp, double ypp, double yppp) const;

  GasModel model_;
  WavePattern pattern_;
  std::vector<double> xi_, y_, yp_, ypp_;
  double sigma_, v_m_, u_m_, v_plus_, delta_S_;
  double rate_left_, rate_right_;
};

/// Shoots along the unstable manifold of (v_m, 0) with Dormand-Prince 5(4) and normalizes
/// v^S(0) = (v_m + v_+)/2. Throws ProfileError for degenerate or non-monotone profiles.
ShockProfile solve_profile(const GasModel& model, const WavePattern& pattern,
                           const ProfileOptions& opts = {});

} // namespace nsk
