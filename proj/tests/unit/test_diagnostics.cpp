#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "nsk/diagnostics.hpp"
#include "nsk/errors.hpp"
#include "nsk/solver.hpp"

using namespace nsk;

namespace {

const GasModel kAir(1.4);
const EndState kRight{1.0, 0.0};

WavePattern pattern(double v_m, double delta_R) {
  if (v_m == kRight.v)
    return construct_pattern(kAir, kRight, v_m, left_volume_for_strength(kAir, kRight, delta_R));
  const auto [u_m, sigma] = shock_curve(kAir, v_m, kRight);
  (void)sigma;
  const double v_minus =
      delta_R > 0.0 ? left_volume_for_strength(kAir, {v_m, u_m}, delta_R) : v_m;
  return construct_pattern(kAir, kRight, v_m, v_minus);
}

// composite plus eps times a smooth bump in every field
SimState bumped(const std::vector<CompositeSample>& bar, const std::vector<double>& x, double eps) {
  SimState s;
  for (std::size_t i = 0; i < bar.size(); ++i) {
    const double b = std::exp(-0.5 * x[i] * x[i] / 4.0);
    s.v.push_back(bar[i].v + eps * b);
    s.u.push_back(bar[i].u + eps * 0.7 * b * std::cos(x[i]));
    s.w.push_back(bar[i].w + eps * 0.3 * b * std::sin(x[i]));
  }
  return s;
}

std::array<double, 10> quadratic_terms(const GoodTerms& g) {
  return {g.G1, g.G3, g.GSu, g.GSv, g.GR, g.Gw, g.Du1, g.Du2, g.Dw1, g.Dw2};
}

} // namespace

TEST(RecordColumns, Schema) {
  const char* expected[] = {"t", "X", "Xdot", "L2_phi", "L2_psi", "L2_omega", "H1_psi",
                            "H1_omega", "W1inf_phi", "Linf_psi", "eta_weighted", "G1", "G3",
                            "GSu", "GSv", "GR", "Gw", "Du1", "Du2", "Dw1", "Dw2",
                            "constraint_defect", "mass_defect"};
  const auto& cols = record_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) EXPECT_STREQ(cols[i], expected[i]);
  DiagnosticsRecord r;
  r.G1 = 3.0;
  r.mass_defect = 5.0;
  EXPECT_EQ(record_values(r)[11], 3.0);
  EXPECT_EQ(record_values(r)[22], 5.0);
}

TEST(RelativeEntropy, Density) {
  EXPECT_EQ(relative_entropy_density(kAir, 0.9, 0.1, 0.2, 0.9, 0.1, 0.2), 0.0);
  EXPECT_NEAR(relative_entropy_density(kAir, 0.9, 0.3, 0.2, 0.9, 0.1, 0.2), 0.02, 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(0.5, 1.5), e(-0.5, 0.5);
  for (int i = 0; i < 1000; ++i) {
    const double u = e(rng), ub = e(rng);
    EXPECT_GE(relative_entropy_density(kAir, d(rng), u, e(rng), d(rng), ub, e(rng)),
              0.5 * (u - ub) * (u - ub));
  }
}

TEST(RelativeEntropy, LocallyEquivalentToL2) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> base(0.85, 1.15), pert(-0.1, 0.1);
  double c = INFINITY;
  for (int i = 0; i < 10000; ++i) {
    const double vb = base(rng), dv = pert(rng), du = pert(rng), dw = pert(rng);
    const double eta = relative_entropy_density(kAir, vb + dv, du, dw, vb, 0.0, 0.0);
    const double l2 = dv * dv + du * du + dw * dw;
    if (l2 > 0.0) c = std::min(c, eta / l2);
  }
  EXPECT_GT(c, 0.0);
  EXPECT_LE(c, 0.5);
}

TEST(Differences, Stencils) {
  const std::vector<double> f{0.0, 1.0, 4.0, 9.0, 16.0};
  const auto d1 = first_difference(f, 1.0);
  EXPECT_EQ(d1[0], 1.0);
  EXPECT_EQ(d1[2], 4.0);
  EXPECT_EQ(d1[4], 7.0);
  const auto d2 = second_difference(f, 1.0);
  for (double v : d2) EXPECT_EQ(v, 2.0);
}

TEST(PerturbationNorms, ZeroAndGaussian) {
  const std::size_t n = 4001;
  const double dx = 0.01;
  Perturbations p;
  p.phi.assign(n, 0.0);
  p.psi.assign(n, 0.0);
  p.omega.assign(n, 0.0);
  const PerturbationNorms z = perturbation_norms(p, dx);
  EXPECT_EQ(z.L2_phi, 0.0);
  EXPECT_EQ(z.W1inf_phi, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -20.0 + dx * static_cast<double>(i);
    p.phi[i] = 1e-3 * std::exp(-0.5 * x * x / 4.0);
  }
  const PerturbationNorms g = perturbation_norms(p, dx);
  EXPECT_NEAR(g.L2_phi / (1e-3 * std::pow(std::numbers::pi, 0.25) * std::sqrt(2.0)), 1.0, 0.01);
  for (double& v : p.phi) v *= 0.5;
  const PerturbationNorms h = perturbation_norms(p, dx);
  EXPECT_EQ(h.Linf_phi, 0.5 * g.Linf_phi);
  EXPECT_LT(h.W1inf_phi, g.W1inf_phi);
}

TEST(GoodTerms, ZeroPerturbation) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 801}, SchemeConfig{});
  const auto bar = solver.sample_bar(0.0, 0.0);
  const SimState s = bumped(bar, solver.x(), 0.0);
  for (double g : quadratic_terms(good_terms(kAir, wave.pattern(), s, bar, solver.grid().dx())))
    EXPECT_EQ(g, 0.0);
  EXPECT_EQ(weighted_relative_entropy(kAir, s, bar, solver.grid().dx()), 0.0);
}

TEST(GoodTerms, NoRarefactionTerm) {
  const CompositeWave wave(kAir, pattern(0.9, 0.0));
  const Solver solver(wave, {-100.0, 100.0, 801}, SchemeConfig{});
  const auto bar = solver.sample_bar(0.0, 0.0);
  const SimState s = bumped(bar, solver.x(), 1e-3);
  EXPECT_EQ(good_terms(kAir, wave.pattern(), s, bar, solver.grid().dx()).GR, 0.0);
}

TEST(GoodTerms, QuadraticHomogeneity) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 801}, SchemeConfig{});
  const auto bar = solver.sample_bar(0.0, 0.0);
  const double dx = solver.grid().dx();
  const auto one = quadratic_terms(good_terms(kAir, wave.pattern(), bumped(bar, solver.x(), 1e-4), bar, dx));
  const auto two = quadratic_terms(good_terms(kAir, wave.pattern(), bumped(bar, solver.x(), 2e-4), bar, dx));
  // G1 goes through p(v) - p(vbar), quadratic only to leading order
  EXPECT_NEAR(two[0] / one[0], 4.0, 4.0 * 1e-3);
  for (std::size_t k = 1; k < one.size(); ++k) {
    if (one[k] == 0.0) continue;
    EXPECT_NEAR(two[k] / one[k], 4.0, 4e-10) << "term " << k;
  }
}

TEST(GoodTerms, G1DependsOnVelocityDifferences) {
  const CompositeWave wave(kAir, pattern(0.95, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 801}, SchemeConfig{});
  auto bar = solver.sample_bar(0.0, 0.0);
  const double dx = solver.grid().dx();
  SimState s = bumped(bar, solver.x(), 1e-3);
  const double before = good_terms(kAir, wave.pattern(), s, bar, dx).G1;
  for (std::size_t i = 0; i < bar.size(); ++i) {
    s.u[i] += 0.25;
    bar[i].u += 0.25;
  }
  EXPECT_NEAR(good_terms(kAir, wave.pattern(), s, bar, dx).G1, before, 1e-12 * before);
}

TEST(WeightedEntropy, UnitWeightWithoutShock) {
  const CompositeWave wave(kAir, pattern(1.0, 0.05));
  const Solver solver(wave, {-100.0, 100.0, 801}, SchemeConfig{});
  const auto bar = solver.sample_bar(0.0, 0.0);
  const SimState s = bumped(bar, solver.x(), 1e-3);
  const double dx = solver.grid().dx();
  double plain = 0.0;
  for (std::size_t i = 0; i < bar.size(); ++i) {
    const double wt = (i == 0 || i + 1 == bar.size()) ? 0.5 : 1.0;
    plain += wt * relative_entropy_density(kAir, s.v[i], s.u[i], s.w[i], bar[i].v, bar[i].u, bar[i].w);
  }
  EXPECT_NEAR(weighted_relative_entropy(kAir, s, bar, dx), plain * dx, 1e-15);
}

TEST(HardyLegendre, ClosedForms) {
  const std::size_t n = 2049;
  std::vector<double> c(n, 3.0), lin(n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = static_cast<double>(i) / (n - 1);
    lin[i] = y;
    sq[i] = y * y;
  }
  const auto [c0, c1] = hardy_legendre_gap(c);
  EXPECT_NEAR(c0, 0.0, 1e-15);
  EXPECT_NEAR(c1, 0.0, 1e-15);
  const auto [l0, l1] = hardy_legendre_gap(lin);
  EXPECT_NEAR(l0, 1.0 / 12.0, 1e-6);
  EXPECT_NEAR(l1, 1.0 / 12.0, 1e-6);
  const auto [s0, s1] = hardy_legendre_gap(sq);
  EXPECT_NEAR(s0, 4.0 / 45.0, 1e-6);
  EXPECT_NEAR(s1, 0.1, 1e-6);
  EXPECT_THROW(hardy_legendre_gap(std::vector<double>{1.0, 2.0}), DomainError);
}
