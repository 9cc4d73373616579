#pragma once

#include <string>
#include <utility>

#include "nsk/thermo.hpp"

namespace nsk {

struct EndState {
  double v = 1.0;
  double u = 0.0;
};

/// Rarefaction (1-family) plus shock (2-family) Riemann pattern with the constants derived
/// from the intermediate state.
struct WavePattern {
  EndState left;
  EndState mid;
  EndState right;
  double sigma = 0.0;    // shock speed
  double delta_R = 0.0;  // |u_m - u_-|
  double delta_S = 0.0;  // |v_+ - v_m|
  double sigma_m = 0.0;  // sqrt(-p'(v_m))
  double alpha_m = 0.0;  // (gamma+1) / (2 gamma sigma_m p(v_m))
  double M = 0.0;        // shift gain 5 sigma_m^3 alpha_m / 4
  double C1 = 0.0;       // 1/2 (1/sigma_m - sqrt(delta_S) (gamma+1)/(gamma p(v_m)))
  bool rarefaction_degenerate = false;
  bool shock_degenerate = false;

  // Equivalent strength measures, reported but never used in formulas.
  double delta_R_volume = 0.0;    // |v_m - v_-|
  double delta_S_velocity = 0.0;  // |u_+ - u_m|
};

/// Strengths below this are treated as absent waves.
inline constexpr double kDegenerateStrength = 1e-10;

struct PatternOptions {
  /// Patterns whose delta_R or delta_S exceed the cap are rejected.
  double strength_cap = 0.2;
};

/// u on the R1 curve through `anchor`, for 0 < v <= anchor.v.
double rarefaction_curve_u(const GasModel& model, double v, const EndState& anchor);

/// (u, sigma) on the S2 Hugoniot curve through `right`, for 0 < v < right.v.
std::pair<double, double> shock_curve(const GasModel& model, double v, const EndState& right);

/// Shock speed from the Rankine-Hugoniot condition, with the v -> v_+ limit handled.
double shock_speed(const GasModel& model, double v, double v_plus);

/// Finds the intermediate state joining `left` (by R1) and `right` (by S2).
WavePattern solve_intermediate_state(const GasModel& model, const EndState& left,
                                     const EndState& right, const PatternOptions& opts = {});

/// Builds a pattern from the right state, the intermediate volume and the left volume
/// (v_minus <= v_m); the velocities follow from the wave curves.
WavePattern construct_pattern(const GasModel& model, const EndState& right, double v_m,
                              double v_minus, const PatternOptions& opts = {});

/// Left volume on R1(mid) whose velocity jump |u_m - u_-| equals delta_R.
double left_volume_for_strength(const GasModel& model, const EndState& mid, double delta_R);

/// Flat `key = value` rendering of every field.
std::string format_pattern(const WavePattern& pattern);

} // namespace nsk
