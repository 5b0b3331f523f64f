#pragma once

#include <vector>

#include "isoperim/comparison.hpp"
#include "isoperim/profile.hpp"

namespace isoperim {

/// Surface area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2),
/// with the half-integer Gamma values evaluated exactly.
double unit_sphere_area(int n);

struct special_points_t {
  double x_s;   // (24 pi / r0)^{3/2}, the round-sphere terminus
  double x_fb;  // (8 pi / (r0 - 2 eps ric0))^{3/2}, the football terminus
};

special_points_t special_points(const comparison_config& cfg);

enum class path_case { one, two, three };

/// Mass-constant descent curve gamma(x0) in the (x, y) = (F, F') plane,
/// terminating at (x0, 0).  Case one: single m_Ric-constant branch.
/// Case two: m_Ric-constant on [0, x1], m_R-constant on [x1, x0].
/// Case three (x0 = x_S): m_R = 0 throughout.
struct phase_path {
  path_case kind = path_case::one;
  double x0 = 0.0;
  double c1 = 0.0;  // m_R constant of the outer branch
  double c2 = 0.0;  // m_Ric constant of the inner branch
  double x1 = 0.0;  // branch junction
  comparison_config cfg;
  std::vector<double> xs, ys;  // samples along the path

  /// y(x) from the closed-form branch expressions.
  double y_of(double x) const;
  /// y^2 (the branch radicand) and its x-derivatives.
  double y_squared(double x) const;
  double y_squared_derivative(double x) const;
  double y_squared_second_derivative(double x) const;
};

/// Throws numerical_error ("no admissible path") for x0 > x_S.
phase_path gamma(double x0, const comparison_config& cfg, int samples = 257);

/// Exact ∫_0^X (D - kappa x^{2/3})^{-1/2} dx
///   = (3/2) D kappa^{-3/2} (phi - sin phi cos phi),
/// phi = arcsin(sqrt(kappa X^{2/3} / D)).
double sqrt_cap_integral(double D, double kappa, double X);

/// W(x0) = ∫ dx / y along the path: closed form in case one, closed
/// branch-A form plus singularity-subtracted Simpson on the outer branch
/// otherwise.
double path_volume(const phase_path& path, int panels = 4000);

/// Half the volume of the round n-sphere with Ricci constant ric0,
/// computed through the phase-plane integral with singular quadrature:
/// (n^2 w^{2/(n-1)})^{(n-1)/2} ((n-1)/(n^2 ric0))^{n/2} ∫_0^1 (1-z^{2/n})^{-1/2} dz.
double bishop_halfvolume(int dim, double ric0, int panels = 4000);

struct football_result {
  iso_profile profile;
  phase_path path;
  double x_bar = 0.0;          // maximizer of W on [x_FB, x_S]
  double half_volume = 0.0;    // W(x_bar)
  bool boundary_maximizer = false;
};

/// Equality manifold of the volume comparison: maximizes W(x0) by a
/// 256-point scan plus golden-section refinement, integrates gamma(x_bar)
/// into an A(V) profile (volume 2 W(x_bar), conical tips closed by the
/// square-root asymptotics).
football_result football_profile(const comparison_config& cfg, int panels = 4000);

}  // namespace isoperim
