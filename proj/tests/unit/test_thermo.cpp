#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "nsk/errors.hpp"
#include "nsk/thermo.hpp"

using namespace nsk;
using Big = boost::multiprecision::cpp_dec_float_50;

TEST(Pressure, UnitVolume) {
  for (double g : {1.1, 1.4, 2.0, 3.0}) EXPECT_EQ(GasModel(g).pressure(1.0), 1.0);
}

TEST(Pressure, PowerOfTwo) { EXPECT_DOUBLE_EQ(GasModel(2.0).pressure(2.0), 0.25); }

TEST(Pressure, MatchesHighPrecision) {
  const Big exact = boost::multiprecision::pow(Big("0.9"), Big("-1.4"));
  const double got = GasModel(1.4).pressure(0.9);
  EXPECT_LT(std::abs(got - exact.convert_to<double>()) / got, 1e-14);
}

TEST(Pressure, RejectsVacuum) {
  EXPECT_THROW(GasModel(1.4).pressure(0.0), DomainError);
  EXPECT_THROW(GasModel(1.4).pressure(-1.0), DomainError);
}

TEST(GasModel, RejectsGammaAtMostOne) { EXPECT_THROW(GasModel(1.0), DomainError); }

TEST(InternalEnergy, Values) {
  EXPECT_DOUBLE_EQ(GasModel(2.0).internal_energy(1.0), 1.0);
  EXPECT_DOUBLE_EQ(GasModel(3.0).internal_energy(2.0), 0.125);
}

TEST(InternalEnergy, DerivativeIsMinusPressure) {
  const GasModel m(1.4);
  const double h = 1e-5, v = 1.3;
  const double fd = (m.internal_energy(v + h) - m.internal_energy(v - h)) / (2 * h);
  EXPECT_LT(std::abs(fd + m.pressure(v)), 1e-8);
}

TEST(RelativeQuantity, Diagonal) {
  EXPECT_EQ(relative_quantity(GasModel(1.4), Constitutive::internal_energy, 1.7, 1.7), 0.0);
}

TEST(RelativeQuantity, PressureByHand) {
  EXPECT_DOUBLE_EQ(relative_quantity(GasModel(2.0), Constitutive::pressure, 2.0, 1.0), 1.25);
}

TEST(RelativeQuantity, QuadraticLimit) {
  const GasModel m(1.4);
  const double h = 1e-3;
  for (double s : {-1.0, 1.0}) {
    const double q = relative_quantity(m, Constitutive::internal_energy, 1.0 + s * h, 1.0);
    EXPECT_NEAR(q / (0.5 * m.internal_energy_dd(1.0) * h * h), 1.0, 0.01);
  }
}

TEST(RelativeQuantity, ConvexOnRandomPairs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.1, 3.0);
  for (double g : {1.4, 3.0}) {
    const GasModel m(g);
    for (int i = 0; i < 10000; ++i) {
      const double v = d(rng), vb = d(rng);
      for (auto f : {Constitutive::pressure, Constitutive::internal_energy}) {
        const double q = relative_quantity(m, f, v, vb);
        EXPECT_GE(q, -1e-14);
        if (std::abs(v - vb) > 1e-6) EXPECT_GT(q, 0.0);
      }
    }
  }
}

TEST(CharacteristicSpeeds, UnitVolume) {
  const auto [l1, l2] = GasModel(3.0).characteristic_speeds(1.0);
  EXPECT_DOUBLE_EQ(l1, -std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(l2, std::sqrt(3.0));
}

TEST(CharacteristicSpeeds, Lambda1Increasing) {
  const GasModel m(1.4);
  double prev = m.lambda1(0.5);
  for (int i = 1; i <= 100; ++i) {
    const double cur = m.lambda1(0.5 + 1.5 * i / 100.0);
    EXPECT_GT(cur, prev);
    prev = cur;
  }
}

TEST(CharacteristicSpeeds, FiniteDifferenceOracle) {
  const GasModel m(1.4);
  const double h = 1e-5, v = 0.9;
  const double dp = (m.pressure(v + h) - m.pressure(v - h)) / (2 * h);
  EXPECT_NEAR(m.lambda1(v), -std::sqrt(-dp), 1e-6);
}

TEST(CharacteristicSpeeds, InverseRoundTrip) {
  const GasModel m(1.4);
  for (double v : {0.5, 0.9, 1.0, 2.5}) EXPECT_NEAR(m.lambda1_inverse(m.lambda1(v)), v, 1e-13);
}

TEST(RiemannInvariant, AdditiveInVelocity) {
  const GasModel m(1.4);
  for (double c : {-1.0, 0.3, 7.0})
    EXPECT_NEAR(m.riemann_invariant_z1(0.8, 0.2 + c) - m.riemann_invariant_z1(0.8, 0.2), c, 1e-14);
}

TEST(RiemannInvariant, AntiderivativeMatchesQuadrature) {
  const GasModel m(1.4);
  auto f = [&](double v) { return m.lambda1(v); };
  const double base = 0.5;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, base, 1.0);
  EXPECT_NEAR(m.lambda1_antiderivative(1.0) - m.lambda1_antiderivative(base), integral, 1e-10);
}

TEST(PowerLaw, DifferenceWithoutCancellation) {
  const PowerLaw p{1.0, -1.4};
  const double a = 0.9, d = 1e-12;
  const Big exact = boost::multiprecision::pow(Big(a) + Big(d), Big("-1.4")) -
                    boost::multiprecision::pow(Big(a), Big("-1.4"));
  EXPECT_LT(std::abs(p.difference(a, d) / exact.convert_to<double>() - 1.0), 1e-10);
}
