#pragma once

#include <vector>

#include "isoperim/comparison.hpp"

namespace isoperim {

/// Normalized half-volume functional of the sharp volume comparison, in
/// unit-sphere normalization (r0 = 6, ric0 = 2, v0 = 2 pi^2):
///   w_eps(z) = (1/pi^2) (pi/4) eps^{-1/2} z          for z <= 4pi/(3-2eps),
///   w_eps(z) = (1/pi^2) [ I1 + I2 ]                  otherwise, where
///   I1 = \int_0^{y} (36pi - 27(1-eps) y^{2/3} - 9 eps x^{2/3})^{-1/2} dx,
///   I2 = \int_y^{z^{3/2}} (36pi - 18(1-eps) y x^{-1/3} - 9 x^{2/3})^{-1/2} dx,
///   y(z) = z^{1/2} (4pi - z) / (2(1-eps)).
/// I2 is evaluated with the singularity-subtracted Simpson rule; the two
/// integrands agree at x = y.
double w_eps(double eps, double z, int panels = 4000);

struct alpha_result {
  double epsilon = 0.0;
  double alpha = 1.0;
  double argmax_z = 0.0;
  std::vector<double> z_grid, w_grid;  // filled when a grid is requested
};

/// sup of w_eps over [4pi/(3-2eps), 4pi]: dense scan plus golden-section
/// refinement around the two best local maxima.  alpha >= 1 always
/// (w_eps(4pi) = 1) and is nonincreasing in eps.
alpha_result alpha(double eps, int scan_points = 512, int panels = 4000,
                   int grid_export = 0);

struct epsilon0_result {
  double value = 0.0;
  double lower = 0.0;  // bracket achieved by the bisection
  double upper = 0.0;
};

/// Threshold inf { eps : alpha(eps) = 1 }: bisection of the monotone
/// predicate alpha(eps) > 1 + 1e-7 over [1 - sqrt(3)/2, 0.2].
epsilon0_result epsilon0(double tol = 1e-6, int panels = 4000);

/// alpha(eps) * v0 in the configured normalization.
double volume_bound(double eps, const comparison_config& cfg);

}  // namespace isoperim
