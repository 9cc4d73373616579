#pragma once

#include <optional>

#include "nsk/rarefaction.hpp"
#include "nsk/riemann.hpp"
#include "nsk/shock_profile.hpp"

namespace nsk {

/// Composite wave fields at one (t, x) together with the two component waves.
struct CompositeSample {
  double v = 0.0, u = 0.0, w = 0.0;
  double v_x = 0.0, u_x = 0.0, w_x = 0.0;
  double v_xx = 0.0;
  double v_t = 0.0;  // at zero shift velocity
  double a = 1.0, a_x = 0.0;
  double xi = 0.0;
  RarefactionSample R;
  ProfileSample S;
};

struct Q1Terms {
  double interaction = 0.0;  // Q1^I
  double rarefaction = 0.0;  // Q1^R
};

/// Wave interaction norms at one time.
struct InteractionNorms {
  double t = 0.0;
  double vSx_vR_L1 = 0.0;   // ||v^S_x (v^R - v_m)||_L1
  double vSx_vR_L2 = 0.0;   // ||v^S_x (v^R - v_m)||_L2
  double vRx_vSx_L1 = 0.0;  // ||v^R_x v^S_x||_L1
  double vRx_vSx_L2 = 0.0;  // ||v^R_x v^S_x||_L2
  double vRx_vS_L2 = 0.0;   // ||v^R_x (v^S - v_m)||_L2
  double Q1I_L2 = 0.0;
  double Q2_L2 = 0.0;       // for unit shift velocity
};

/// v_bar = v^R + v^S(x - sigma t - X) - v_m and the matching u_bar, w_bar.
class CompositeWave {
public:
  CompositeWave(const GasModel& model, const WavePattern& pattern,
                const ProfileOptions& profile_opts = {});

  const GasModel& model() const { return model_; }
  const WavePattern& pattern() const { return pattern_; }
  const RarefactionWave& rarefaction() const { return rarefaction_; }
  bool has_shock() const { return profile_.has_value(); }
  const ShockProfile& profile() const { return *profile_; }

  /// Shock-profile sample at xi; constant intermediate state when the shock is absent.
  ProfileSample shock_at(double xi) const;

  CompositeSample eval_bar(double t, double x, double X) const;
  /// Weight a and a_x at (t, x) for shift X.
  std::pair<double, double> weight(double t, double x, double X) const;

  Q1Terms q1(double t, double x, double X) const;
  Q1Terms q1(const CompositeSample& s) const;
  double q2(double t, double x, double X, double Xdot) const;
  double q2(const CompositeSample& s, double Xdot) const;

  /// x-interval that contains both waves (rarefaction fan and shock table) at time t.
  std::pair<double, double> window(double t, double X) const;

  InteractionNorms interaction_norms(double t, double X) const;

private:
  GasModel model_;
  WavePattern pattern_;
  RarefactionWave rarefaction_;
  std::optional<ShockProfile> profile_;
  double sqrt_delta_S_;
};

} // namespace nsk
