#pragma once

#include <numbers>

namespace isoperim {

/// Normalization constants of the model round sphere used by the mass
/// functions and the volume comparison: scalar curvature r0, Ricci
/// constant ric0 (= r0/3 for the same sphere), volume v0.  Defaults are
/// the unit 3-sphere: r0 = 6, ric0 = 2, v0 = 2 pi^2.
struct comparison_config {
  double epsilon = 1.0;
  double r0 = 6.0;
  double ric0 = 2.0;
  double v0 = 2.0 * std::numbers::pi * std::numbers::pi;
  int dim = 3;

  static comparison_config defaults(double eps) {
    comparison_config c;
    c.epsilon = eps;
    return c;
  }

  /// Same sphere rescaled to scalar curvature r0 (ric0 = r0/3,
  /// v0 = 2 pi^2 (6/r0)^{3/2}).
  static comparison_config for_scale(double eps, double r0);
};

}  // namespace isoperim
