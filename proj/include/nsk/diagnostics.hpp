#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "nsk/solver.hpp"

namespace nsk {

/// One time sample of the perturbation norms, weighted entropy and good terms.
struct DiagnosticsRecord {
  double t = 0.0, X = 0.0, Xdot = 0.0;
  double L2_phi = 0.0, L2_psi = 0.0, L2_omega = 0.0;
  double H1_psi = 0.0, H1_omega = 0.0;
  double W1inf_phi = 0.0, Linf_psi = 0.0;
  double eta_weighted = 0.0;
  double G1 = 0.0, G3 = 0.0, GSu = 0.0, GSv = 0.0, GR = 0.0, Gw = 0.0;
  double Du1 = 0.0, Du2 = 0.0, Dw1 = 0.0, Dw2 = 0.0;
  double constraint_defect = 0.0, mass_defect = 0.0;
  // weight extremes over the grid; not part of the CSV schema
  double a_min = 1.0, a_max = 1.0;
};

/// Column names in serialization order.
const std::array<const char*, 23>& record_columns();
/// Values in the order of record_columns().
std::array<double, 23> record_values(const DiagnosticsRecord& r);

struct GoodTerms {
  double G1 = 0.0, G3 = 0.0, GSu = 0.0, GSv = 0.0, GR = 0.0;
  double Du1 = 0.0, Du2 = 0.0, Gw = 0.0, Dw1 = 0.0, Dw2 = 0.0;
};

struct PerturbationNorms {
  double L2_phi = 0.0, L2_psi = 0.0, L2_omega = 0.0;
  double H1_psi = 0.0, H1_omega = 0.0;
  double W1inf_phi = 0.0, Linf_psi = 0.0, Linf_phi = 0.0;
};

/// |u - ubar|^2/2 + Q(v|vbar) + |w - wbar|^2/2.
double relative_entropy_density(const GasModel& model, double v, double u, double w, double vbar,
                                double ubar, double wbar);

/// Perturbations (phi, psi, omega) = state - composite at the nodes.
struct Perturbations {
  std::vector<double> phi, psi, omega;
};
Perturbations perturbations(const SimState& s, const std::vector<CompositeSample>& bar);

/// First differences with the solver's central stencil, one-sided at the end nodes.
std::vector<double> first_difference(std::span<const double> f, double dx);
/// Second differences D+D-, copied from the neighbour at the end nodes.
std::vector<double> second_difference(std::span<const double> f, double dx);

PerturbationNorms perturbation_norms(const Perturbations& p, double dx);
GoodTerms good_terms(const GasModel& model, const WavePattern& pattern, const SimState& s,
                     const std::vector<CompositeSample>& bar, double dx);
double weighted_relative_entropy(const GasModel& model, const SimState& s,
                                 const std::vector<CompositeSample>& bar, double dx);

/// Full record for the current state of a run.
DiagnosticsRecord diagnose(const Solver& solver, const SimState& s);

/// (lhs, rhs) of int |f - mean f|^2 <= 1/2 int y(1-y)|f'|^2 for samples of f on a uniform
/// grid over [0, 1]; trapezoid quadrature, central differences.
std::pair<double, double> hardy_legendre_gap(std::span<const double> f);

} // namespace nsk
