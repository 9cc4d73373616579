#include "nsk/thermo.hpp"

#include <cmath>
#include <sstream>

#include "nsk/errors.hpp"

namespace nsk {

namespace {

// (1+x)^q - 1 - q x, series for small |x| to keep the second-order term exact.
double relative_power_unit(double x, double q) {
  if (std::abs(x) < 0.05) {
    double term = q * (q - 1.0) / 2.0 * x * x;
    double sum = 0.0;
    for (int k = 2; k < 40; ++k) {
      sum += term;
      term *= (q - k) / (k + 1.0) * x;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return std::expm1(q * std::log1p(x)) - q * x;
}

double relative_power(double coeff, double q, double v, double vbar) {
  const double x = (v - vbar) / vbar;
  return coeff * std::pow(vbar, q) * relative_power_unit(x, q);
}

} // namespace

double power_difference(double a, double d, double q) {
  return std::pow(a, q) * std::expm1(q * std::log1p(d / a));
}

double PowerLaw::operator()(double v) const { return coeff * std::pow(v, exponent); }

double PowerLaw::difference(double a, double d) const {
  if (coeff == 0.0 || exponent == 0.0) return 0.0;
  return coeff * power_difference(a, d, exponent);
}

void check_volume(double v, const char* what) {
  if (!(v > kVolumeFloor) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << ": specific volume must be positive, got " << v;
    throw DomainError(msg.str());
  }
}

GasModel::GasModel(double gamma, double alpha, double beta)
    : gamma_(gamma), alpha_(alpha), beta_(beta) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw DomainError("gamma must exceed 1");
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("viscosity and capillarity exponents must be finite");
}

double GasModel::pressure(double v) const {
  check_volume(v, "pressure");
  return std::pow(v, -gamma_);
}

double GasModel::pressure_d(double v) const {
  check_volume(v, "pressure_d");
  return -gamma_ * std::pow(v, -gamma_ - 1.0);
}

double GasModel::pressure_dd(double v) const {
  check_volume(v, "pressure_dd");
  return gamma_ * (gamma_ + 1.0) * std::pow(v, -gamma_ - 2.0);
}

double GasModel::internal_energy(double v) const {
  check_volume(v, "internal_energy");
  return std::pow(v, 1.0 - gamma_) / (gamma_ - 1.0);
}

double GasModel::internal_energy_d(double v) const { return -pressure(v); }

double GasModel::internal_energy_dd(double v) const { return -pressure_d(v); }

double GasModel::viscosity(double v) const {
  check_volume(v, "viscosity");
  return std::pow(v, -alpha_);
}

double GasModel::capillarity(double v) const {
  check_volume(v, "capillarity");
  return std::pow(v, -beta_);
}

double GasModel::capillarity_d(double v) const {
  check_volume(v, "capillarity_d");
  return -beta_ * std::pow(v, -beta_ - 1.0);
}

std::pair<double, double> GasModel::characteristic_speeds(double v) const {
  const double l1 = lambda1(v);
  return {l1, -l1};
}

double GasModel::lambda1(double v) const {
  check_volume(v, "lambda1");
  return -std::sqrt(gamma_) * std::pow(v, -0.5 * (gamma_ + 1.0));
}

double GasModel::lambda1_inverse(double w) const {
  if (!(w < 0.0) || !std::isfinite(w)) throw DomainError("lambda1_inverse: speed must be negative");
  return std::pow(gamma_ / (w * w), 1.0 / (gamma_ + 1.0));
}

double GasModel::lambda1_antiderivative(double v) const {
  check_volume(v, "lambda1_antiderivative");
  return 2.0 * std::sqrt(gamma_) / (gamma_ - 1.0) * std::pow(v, 0.5 * (1.0 - gamma_));
}

double GasModel::riemann_invariant_z1(double v, double u) const {
  return u + lambda1_antiderivative(v);
}

double relative_quantity(const GasModel& model, Constitutive f, double v, double vbar) {
  check_volume(v, "relative_quantity");
  check_volume(vbar, "relative_quantity");
  const double g = model.gamma();
  switch (f) {
  case Constitutive::pressure:
    return relative_power(1.0, -g, v, vbar);
  case Constitutive::internal_energy:
    return relative_power(1.0 / (g - 1.0), 1.0 - g, v, vbar);
  }
  return 0.0;
}

} // namespace nsk
