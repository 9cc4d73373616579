#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nsk/composite.hpp"
#include "nsk/kernels.hpp"

namespace nsk {

struct Grid {
  double x_lo = -1.0;
  double x_hi = 1.0;
  std::size_t n = 16;  // node count, end nodes included

  double dx() const { return (x_hi - x_lo) / static_cast<double>(n - 1); }
  double x(std::size_t i) const { return x_lo + dx() * static_cast<double>(i); }
  void validate() const;
};

enum class PerturbationKind { none, gaussian };
enum class PerturbationField { v, u, both };

/// amplitude * exp(-(x - center)^2 / (2 width^2)) added to the selected fields.
struct Perturbation {
  PerturbationKind kind = PerturbationKind::none;
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;
  PerturbationField field = PerturbationField::both;

  double value(double x) const;
  bool touches_v() const { return kind != PerturbationKind::none && field != PerturbationField::u; }
  bool touches_u() const { return kind != PerturbationKind::none && field != PerturbationField::v; }
};

struct SchemeConfig {
  double cfl = 0.4;
  double t_end = 1.0;
  std::size_t output_stride = 100;  // steps between diagnostics records
  bool shift_enabled = true;
  Perturbation perturbation;
  double amplitude_cap = 0.05;
  double constraint_ceiling = 1e-4;
  double vacuum_floor = 1e-6;
  bool parallel = true;

  void validate() const;
};

/// Fields on the grid plus the shift and the mass-audit accumulators.
struct SimState {
  std::vector<double> v, u, w;
  double t = 0.0;
  double X = 0.0;
  double last_Xdot = 0.0;
  std::size_t steps = 0;
  double flux_v = 0.0;     // time integral of d/dt sum(v) from the scheme's boundary flux
  double flux_vbar = 0.0;  // time integral of d/dt int(v_bar)
  double mass0 = 0.0;      // initial int(v - v_bar)
  double mass_scale = 1.0; // initial int(v)
};

/// Method-of-lines integrator for the augmented system coupled to the shift ODE.
/// Holds scratch buffers, so one Solver drives one run at a time.
class Solver {
public:
  Solver(const CompositeWave& wave, Grid grid, SchemeConfig config);

  const Grid& grid() const { return grid_; }
  const CompositeWave& wave() const { return wave_; }
  const SchemeConfig& config() const { return config_; }
  const std::vector<double>& x() const { return x_; }

  SimState initial_data() const;

  void spatial_rhs(const SimState& s, std::vector<double>& vt, std::vector<double>& ut,
                   std::vector<double>& wt) const;

  /// Shift velocity for velocity field u at time t and shift X (0 when disabled or absent).
  double shift_rhs(const std::vector<double>& u, double t, double X) const;

  /// cfl * dx^2 / max(mu/v, sqrt(kappa)/v^(5/2)); throws SolverError on vacuum or NaN.
  double stable_dt(const SimState& s) const;

  /// One classical RK4 step of (v, u, w, X). Throws SolverError when dt violates the CFL
  /// bound or the result is non-finite or below the vacuum floor.
  void step(SimState& s, double dt) const;

  double constraint_defect(const SimState& s) const;
  /// |change of int(v - v_bar) - integrated boundary flux| / initial int(v).
  double mass_defect(const SimState& s) const;

  /// Composite samples at every node for time t and shift X.
  std::vector<CompositeSample> sample_bar(double t, double X) const;

  /// Nodes [lo, hi] whose profile coordinate lies inside the tabulated shock (lo > hi if none).
  std::pair<std::size_t, std::size_t> shock_range(double t, double X) const;

private:
  struct RareCache {
    double t = -1.0;
    std::size_t lo = 1, hi = 0;
    std::vector<double> u_dev;
  };
  const std::vector<double>& rarefaction_u_dev(double t, std::size_t lo, std::size_t hi) const;
  double bar_flux(double t, double X, double Xdot) const;
  double trapezoid_mass(const std::vector<double>& v, double t, double X) const;
  void derivatives(const std::vector<double>& v, const std::vector<double>& u,
                   const std::vector<double>& w, std::vector<double>& vt, std::vector<double>& ut,
                   std::vector<double>& wt) const;

  const CompositeWave& wave_;
  Grid grid_;
  SchemeConfig config_;
  kernels::Exponents exps_;
  std::vector<double> x_;
  bool shift_active_;
  double shift_gain_;
  mutable kernels::Scratch scratch_;
  mutable std::array<RareCache, 3> cache_;
  mutable std::size_t cache_next_ = 0;
  mutable std::vector<double> stage_v_, stage_u_, stage_w_;
  mutable std::array<std::vector<double>, 12> k_;
};

} // namespace nsk
