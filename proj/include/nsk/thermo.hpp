#pragma once

#include <utility>

namespace nsk {

/// c * v^q with exact derivatives and a cancellation-free difference.
struct PowerLaw {
  double coeff = 1.0;
  double exponent = 0.0;

  double operator()(double v) const;
  PowerLaw derivative() const { return {coeff * exponent, exponent - 1.0}; }
  /// f(a + d) - f(a), accurate in relative terms even when |d| << a.
  double difference(double a, double d) const;
};

/// (a + d)^q - a^q computed through expm1/log1p.
double power_difference(double a, double d, double q);

/// Volumes at or below this value are rejected as vacuum.
inline constexpr double kVolumeFloor = 1e-12;

/// gamma-law gas, p(v) = v^-gamma, with viscosity mu(v) = v^-alpha and
/// capillarity kappa(v) = v^-beta.
class GasModel {
public:
  explicit GasModel(double gamma, double alpha = 0.0, double beta = 0.0);

  double gamma() const { return gamma_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  double pressure(double v) const;
  double pressure_d(double v) const;
  double pressure_dd(double v) const;
  double internal_energy(double v) const;
  double internal_energy_d(double v) const;
  double internal_energy_dd(double v) const;
  double viscosity(double v) const;
  double capillarity(double v) const;
  double capillarity_d(double v) const;

  /// (lambda1, lambda2) = (-sqrt(-p'(v)), sqrt(-p'(v))).
  std::pair<double, double> characteristic_speeds(double v) const;
  double lambda1(double v) const;
  /// Inverse of lambda1 on w < 0: (gamma / w^2)^(1/(gamma+1)).
  double lambda1_inverse(double w) const;
  /// Closed-form antiderivative of lambda1, 2 sqrt(gamma)/(gamma-1) v^((1-gamma)/2).
  double lambda1_antiderivative(double v) const;
  /// z1 = u + int^v lambda1.
  double riemann_invariant_z1(double v, double u) const;

  // Power-law building blocks used by the wave and solver kernels.
  PowerLaw pressure_law() const { return {1.0, -gamma_}; }
  /// mu(v)/v
  PowerLaw viscous_coefficient() const { return {1.0, -alpha_ - 1.0}; }
  /// sqrt(kappa(v))/v^(5/2); w = -g(v) v_x
  PowerLaw capillary_coefficient() const { return {1.0, -0.5 * (beta_ + 5.0)}; }
  /// kappa(v)/v^5 = g(v)^2
  PowerLaw capillary_square() const { return {1.0, -(beta_ + 5.0)}; }

private:
  double gamma_;
  double alpha_;
  double beta_;
};

enum class Constitutive { pressure, internal_energy };

/// F(v|vbar) = F(v) - F(vbar) - F'(vbar)(v - vbar).
double relative_quantity(const GasModel& model, Constitutive f, double v, double vbar);

/// Throws DomainError when v is not a physical volume.
void check_volume(double v, const char* what);

} // namespace nsk
