#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nsk/errors.hpp"
#include "nsk/kernels.hpp"
#include "nsk/simulation.hpp"
#include "nsk/solver.hpp"

using namespace nsk;

namespace {

const GasModel kAir(1.4);
const EndState kRight{1.0, 0.0};

WavePattern pattern(double v_m, double delta_R) {
  const auto [u_m, sigma] = shock_curve(kAir, v_m, kRight);
  (void)sigma;
  const double v_minus =
      delta_R > 0.0 ? left_volume_for_strength(kAir, {v_m, u_m}, delta_R) : v_m;
  return construct_pattern(kAir, kRight, v_m, v_minus);
}

SchemeConfig gaussian(double amplitude, PerturbationField field) {
  SchemeConfig c;
  c.perturbation.kind = PerturbationKind::gaussian;
  c.perturbation.amplitude = amplitude;
  c.perturbation.width = 2.0;
  c.perturbation.field = field;
  return c;
}

} // namespace

TEST(Grid, Validation) {
  EXPECT_THROW((Grid{1.0, -1.0, 16}).validate(), ConfigError);
  EXPECT_THROW((Grid{-1.0, 1.0, 2}).validate(), ConfigError);
}

TEST(InitialData, NoPerturbationIsTheComposite) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 801}, SchemeConfig{});
  const SimState s = solver.initial_data();
  const auto bar = solver.sample_bar(0.0, 0.0);
  for (std::size_t i = 1; i + 1 < s.v.size(); ++i) {
    EXPECT_EQ(s.v[i], bar[i].v);
    EXPECT_EQ(s.u[i], bar[i].u);
  }
  EXPECT_LT(solver.constraint_defect(s), 1e-10);
}

TEST(InitialData, GaussianNorm) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 2001}, gaussian(1e-3, PerturbationField::v));
  const SimState s = solver.initial_data();
  const auto bar = solver.sample_bar(0.0, 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < s.v.size(); ++i) sum += std::pow(s.v[i] - bar[i].v, 2);
  const double l2 = std::sqrt(sum * solver.grid().dx());
  const double exact = 1e-3 * std::pow(std::numbers::pi, 0.25) * std::sqrt(2.0);
  EXPECT_NEAR(l2 / exact, 1.0, 0.01);
  EXPECT_LT(solver.constraint_defect(s), 1e-10);
}

TEST(InitialData, AmplitudeCap) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  EXPECT_THROW(Solver(wave, {-100.0, 100.0, 401}, gaussian(0.5, PerturbationField::both)),
               ConfigError);
}

TEST(SpatialRhs, ConstantStateIsStationary) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-10.0, 10.0, 101}, SchemeConfig{});
  SimState s;
  s.v.assign(101, 1.0);
  s.u.assign(101, 0.0);
  s.w.assign(101, 0.0);
  std::vector<double> vt, ut, wt;
  solver.spatial_rhs(s, vt, ut, wt);
  for (std::size_t i = 0; i < 101; ++i) {
    EXPECT_EQ(vt[i], 0.0);
    EXPECT_EQ(ut[i], 0.0);
    EXPECT_EQ(wt[i], 0.0);
  }
}

TEST(SpatialRhs, FourierSymbol) {
  // velocity mode on the rest state: the scheme is linear there, so the discrete symbol is exact
  const std::size_t n = 257;
  const double L = 2.0 * std::numbers::pi, dx = L / (n - 1), k = 3.0, eps = 1e-6;
  const kernels::Exponents e = kernels::Exponents::from(kAir);
  std::vector<double> v(n, 1.0), u(n), w(n, 0.0), vt(n), ut(n), wt(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = eps * std::sin(k * dx * static_cast<double>(i));
  kernels::Scratch scratch;
  kernels::spatial_rhs_serial(e, dx, {v.data(), u.data(), w.data(), n},
                              {vt.data(), ut.data(), wt.data()}, scratch);
  const double d0 = std::sin(k * dx) / dx;
  const double d2 = 4.0 / (dx * dx) * std::pow(std::sin(0.5 * k * dx), 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double x = dx * static_cast<double>(i);
    EXPECT_NEAR(vt[i], eps * d0 * std::cos(k * x), 1e-15);
    EXPECT_NEAR(ut[i], -eps * d2 * std::sin(k * x), 1e-13);
    EXPECT_NEAR(wt[i], eps * d2 * std::sin(k * x), 1e-13);
  }
  EXPECT_LT(std::abs(d0 - k), k * k * k * dx * dx / 6.0 + 1e-12);
  EXPECT_LT(std::abs(d2 - k * k), std::pow(k, 4) * dx * dx / 12.0 + 1e-12);
}

TEST(Kernels, SerialMatchesParallel) {
  const std::size_t n = 4001;
  const double dx = 0.01;
  const kernels::Exponents e = kernels::Exponents::from(GasModel(1.4, 0.5, 1.0));
  std::vector<double> v(n), u(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -20.0 + dx * static_cast<double>(i);
    v[i] = 1.0 + 0.1 * std::tanh(x);
    u[i] = 0.05 * std::sin(x);
    w[i] = 0.01 * std::cos(x);
  }
  std::vector<double> a(3 * n), b(3 * n);
  kernels::Scratch s1, s2;
  const kernels::ConstFields in{v.data(), u.data(), w.data(), n};
  kernels::spatial_rhs_serial(e, dx, in, {a.data(), a.data() + n, a.data() + 2 * n}, s1);
  kernels::spatial_rhs_parallel(e, dx, in, {b.data(), b.data() + n, b.data() + 2 * n}, s2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(kernels::constraint_defect_serial(e, dx, in),
            kernels::constraint_defect_parallel(e, dx, in));
}

TEST(Shift, ZeroWhenVelocityMatches) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-300.0, 360.0, 2048}, SchemeConfig{});
  const SimState s = solver.initial_data();
  EXPECT_LT(std::abs(solver.shift_rhs(s.u, 0.0, 0.0)), 1e-14);
}

TEST(Shift, LinearInVelocityPerturbation) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver one(wave, {-300.0, 360.0, 2048}, gaussian(1e-3, PerturbationField::u));
  const Solver two(wave, {-300.0, 360.0, 2048}, gaussian(2e-3, PerturbationField::u));
  const double a = one.shift_rhs(one.initial_data().u, 0.0, 0.0);
  const double b = two.shift_rhs(two.initial_data().u, 0.0, 0.0);
  EXPECT_NE(a, 0.0);
  EXPECT_LT(std::abs(b - 2.0 * a), 1e-13 * std::abs(b) + 1e-18);
}

TEST(Shift, DisabledStaysZero) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  SchemeConfig c = gaussian(1e-3, PerturbationField::both);
  c.shift_enabled = false;
  c.t_end = 0.5;
  const Solver solver(wave, {-100.0, 100.0, 401}, c);
  const RunResult r = run(solver);
  for (const auto& rec : r.records) EXPECT_EQ(rec.X, 0.0);
}

TEST(Step, RejectsCflViolation) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 401}, SchemeConfig{});
  SimState s = solver.initial_data();
  EXPECT_THROW(solver.step(s, 10.0 * solver.stable_dt(s)), SolverError);
}

TEST(Step, VacuumAborts) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 401}, SchemeConfig{});
  SimState s = solver.initial_data();
  s.v[200] = -0.1;
  EXPECT_THROW(solver.stable_dt(s), SolverError);
}

TEST(Run, SmokeRecordsAndInvariants) {
  const CompositeWave wave(kAir, pattern(0.9, 0.05));
  SchemeConfig c = gaussian(1e-3, PerturbationField::both);
  c.t_end = 1.0;
  c.output_stride = 5;
  const Solver solver(wave, {-150.0, 150.0, 512}, c);
  const SimState init = solver.initial_data();
  const RunResult r = run(solver);
  EXPECT_GE(r.records.size(), 2u);
  EXPECT_EQ(r.records.back().t, 1.0);
  EXPECT_EQ(r.final_state.v.front(), init.v.front());
  EXPECT_EQ(r.final_state.v.back(), init.v.back());
  EXPECT_EQ(r.final_state.u.front(), init.u.front());
  EXPECT_EQ(r.final_state.u.back(), init.u.back());
  EXPECT_GT(r.min_volume, 0.5 * std::min(wave.pattern().left.v, wave.pattern().mid.v));
  EXPECT_EQ(r.snapshots.size(), 2u);
}

TEST(Run, SerialAndParallelAgreeBitwise) {
  const CompositeWave wave(kAir, pattern(0.9, 0.05));
  SchemeConfig c = gaussian(1e-3, PerturbationField::both);
  c.t_end = 0.5;
  c.parallel = false;
  const RunResult a = run(Solver(wave, {-150.0, 150.0, 512}, c));
  c.parallel = true;
  const RunResult b = run(Solver(wave, {-150.0, 150.0, 512}, c));
  EXPECT_EQ(a.final_state.v, b.final_state.v);
  EXPECT_EQ(a.final_state.u, b.final_state.u);
  EXPECT_EQ(a.final_state.X, b.final_state.X);
}

TEST(Run, MassAudit) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  SchemeConfig c = gaussian(1e-3, PerturbationField::both);
  c.t_end = 2.0;
  const Solver solver(wave, {-100.0, 100.0, 512}, c);
  const RunResult r = run(solver);
  EXPECT_LT(solver.mass_defect(r.final_state), 1e-6);
}
