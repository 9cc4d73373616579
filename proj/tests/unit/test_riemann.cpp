#include <cmath>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "nsk/errors.hpp"
#include "nsk/riemann.hpp"

using namespace nsk;
using Big = boost::multiprecision::cpp_dec_float_50;

namespace {
const GasModel kAir(1.4);
const EndState kRight{1.0, 0.0};
} // namespace

TEST(RarefactionCurve, ZeroLength) {
  const EndState anchor{0.9, 0.3};
  EXPECT_DOUBLE_EQ(rarefaction_curve_u(kAir, 0.9, anchor), 0.3);
}

TEST(RarefactionCurve, KeepsInvariant) {
  const EndState anchor{1.0, 0.1};
  const double z = kAir.riemann_invariant_z1(anchor.v, anchor.u);
  for (double f : {0.7, 0.8, 0.9}) {
    const double v = f * anchor.v;
    EXPECT_LT(std::abs(kAir.riemann_invariant_z1(v, rarefaction_curve_u(kAir, v, anchor)) - z),
              1e-12);
  }
}

TEST(RarefactionCurve, VelocityDecreasesWithVolume) {
  const EndState anchor{1.0, 0.0};
  double prev = anchor.u;
  for (int i = 1; i <= 20; ++i) {
    const double v = 1.0 - 0.02 * i;
    const double u = rarefaction_curve_u(kAir, v, anchor);
    EXPECT_LT(u, prev);
    prev = u;
  }
}

TEST(ShockCurve, SonicLimit) {
  const double sigma = shock_speed(kAir, 1.0 - 1e-8, 1.0);
  EXPECT_NEAR(sigma, std::sqrt(-kAir.pressure_d(1.0)), 1e-4);
}

TEST(ShockCurve, HighPrecisionOracle) {
  const auto [u, sigma] = shock_curve(kAir, 0.9, kRight);
  const Big p = boost::multiprecision::pow(Big("0.9"), Big("-1.4"));
  const Big s = boost::multiprecision::sqrt((p - 1) / Big("0.1"));
  EXPECT_NEAR(sigma, s.convert_to<double>(), 1e-14);
  EXPECT_NEAR(u, (s * Big("0.1")).convert_to<double>(), 1e-14);
}

TEST(ShockCurve, SpeedMonotone) {
  double prev = shock_speed(kAir, 0.5, 1.0);
  for (int i = 1; i < 50; ++i) {
    const double cur = shock_speed(kAir, 0.5 + 0.5 * i / 50.0, 1.0);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
}

TEST(IntermediateState, IdenticalStates) {
  const WavePattern p = solve_intermediate_state(kAir, kRight, kRight);
  EXPECT_DOUBLE_EQ(p.mid.v, 1.0);
  EXPECT_EQ(p.delta_R, 0.0);
  EXPECT_EQ(p.delta_S, 0.0);
  EXPECT_TRUE(p.rarefaction_degenerate);
  EXPECT_TRUE(p.shock_degenerate);
}

TEST(IntermediateState, LeftOnShockCurve) {
  const auto [u, sigma] = shock_curve(kAir, 0.9, kRight);
  (void)sigma;
  const WavePattern p = solve_intermediate_state(kAir, {0.9, u}, kRight);
  EXPECT_NEAR(p.mid.v, 0.9, 1e-10);
  EXPECT_LT(p.delta_R, 1e-10);
}

TEST(IntermediateState, RoundTrip) {
  const auto [u_m, sigma] = shock_curve(kAir, 0.9, kRight);
  (void)sigma;
  const EndState mid{0.9, u_m};
  const EndState left{0.85, rarefaction_curve_u(kAir, 0.85, mid)};
  const WavePattern p = solve_intermediate_state(kAir, left, kRight);
  EXPECT_NEAR(p.mid.v, 0.9, 1e-10);
  EXPECT_NEAR(p.mid.u, u_m, 1e-10);
  EXPECT_NEAR(p.delta_S, 0.1, 1e-10);
  EXPECT_NEAR(p.delta_R, std::abs(u_m - left.u), 1e-10);
}

TEST(IntermediateState, StrengthCap) {
  const auto [u_m, sigma] = shock_curve(kAir, 0.5, kRight);
  (void)sigma;
  EXPECT_THROW(solve_intermediate_state(kAir, {0.5, u_m}, kRight), PatternError);
}

TEST(ConstructPattern, DerivedConstants) {
  const WavePattern p = construct_pattern(kAir, kRight, 0.95, 0.93);
  EXPECT_NEAR(p.sigma_m, std::sqrt(-kAir.pressure_d(0.95)), 1e-14);
  EXPECT_NEAR(p.M, 1.25 * std::pow(p.sigma_m, 3) * p.alpha_m, 1e-14);
  EXPECT_GT(p.C1, 0.0);
}

TEST(ConstructPattern, StrengthForLeftVolume) {
  const auto [u_m, sigma] = shock_curve(kAir, 0.95, kRight);
  (void)sigma;
  const EndState mid{0.95, u_m};
  const double v_minus = left_volume_for_strength(kAir, mid, 0.05);
  EXPECT_NEAR(u_m - rarefaction_curve_u(kAir, v_minus, mid), 0.05, 1e-12);
}
