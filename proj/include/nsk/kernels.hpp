#pragma once

#include <cstddef>
#include <vector>

#include "nsk/thermo.hpp"

namespace nsk::kernels {

/// Exponents of p, mu/v and sqrt(kappa)/v^(5/2) as powers of v.
struct Exponents {
  double pressure;
  double viscous;
  double capillary;

  static Exponents from(const GasModel& model) {
    return {-model.gamma(), -model.alpha() - 1.0, -0.5 * (model.beta() + 5.0)};
  }
};

struct ConstFields {
  const double* v;
  const double* u;
  const double* w;
  std::size_t n;
};

struct MutFields {
  double* v;
  double* u;
  double* w;
};

/// Node coefficients p(v), mu(v)/v and g(v), recomputed by each rhs call.
struct Scratch {
  std::vector<double> p, m, g;
  void resize(std::size_t n) {
    p.resize(n);
    m.resize(n);
    g.resize(n);
  }
};

/// Tendencies of the augmented system on a uniform grid:
///   v_t = D0 u
///   u_t = -D0 p(v) + D-(m D+ u) + D-(g D+ w)
///   w_t = -D-(g D+ u)
/// with face coefficients averaged from the nodes and zero tendency at both end nodes.
void spatial_rhs_serial(const Exponents& e, double dx, ConstFields in, MutFields out,
                        Scratch& scratch);
void spatial_rhs_parallel(const Exponents& e, double dx, ConstFields in, MutFields out,
                          Scratch& scratch);

/// max over interior nodes of |w + g(v) D0 v|.
double constraint_defect_serial(const Exponents& e, double dx, ConstFields in);
double constraint_defect_parallel(const Exponents& e, double dx, ConstFields in);

/// Smallest v and largest max(mu/v, g) over the nodes; false if a value is not finite.
struct FieldBounds {
  double v_min;
  double nu_max;
  bool finite;
};
FieldBounds field_bounds(const Exponents& e, ConstFields in);

/// Threads used by the parallel kernels (NSKLAB_THREADS caps it when set).
int thread_count();
void set_thread_count(int n);

} // namespace nsk::kernels
