#pragma once

#include <vector>

#include "isoperim/schwarzschild.hpp"

namespace isoperim {

/// A symmetric sphere in one of the exactly known model geometries,
/// flowed at unit normal speed; dt offsets are fractions of the local
/// areal radius.
struct flow_probe {
  enum class space { flat, schwarzschild_slice, round_sphere };
  space kind = space::flat;
  double mass = 1.0;           // schwarzschild_slice
  double sphere_radius = 1.0;  // round_sphere: radius rho
  double base = 1.0;           // coordinate radius r, or polar angle theta
  std::vector<double> dt_fractions{1e-2, 5e-3, 2.5e-3};
};

struct variation_report {
  std::vector<double> dt;      // absolute step sizes (strictly decreasing)
  std::vector<double> error;   // |measured - predicted| per step size
  double measured = 0.0;       // centered difference at the smallest dt
  double predicted = 0.0;
  double order = 0.0;          // log2 error ratio between halvings
  bool exact = false;          // error at rounding level; order meaningless
};

/// dA/dt against the first variation of area \int H eta dmu = H A (eta = 1).
variation_report first_variation_check(const flow_probe& probe);

/// dH/dt against -||Pi||^2 - Ric(nu,nu) = -H^2/2 - Ric(nu,nu) for the
/// umbilic symmetric spheres (eta = 1 kills the Laplacian term).
variation_report second_variation_check(const flow_probe& probe);

/// Gauss-equation assembly R/2 - K + H^2/2 - ||Pi||^2/2 with K = 4 pi / A;
/// must reproduce the radial Ricci eigenvalue of the probe sphere.
double gauss_ricci_normal(const flow_probe& probe);
double probe_ricci_normal(const flow_probe& probe);

struct cmc_pair_report {
  double measured_rate = 0.0;  // dA_total/dt under the volume-preserving pair flow
  double predicted_rate = 0.0; // A1 (H1 - H2)
  double volume_rate = 0.0;    // should vanish identically
};

/// Volume-preserving flow (+1 on the sphere at `base`, -A1/A2 on the one
/// at base2): the first-order area change vanishes iff H1 = H2.
cmc_pair_report cmc_pair_area_rate(const flow_probe& probe, double base2);

}  // namespace isoperim
