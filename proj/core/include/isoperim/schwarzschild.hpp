#pragma once

#include <vector>

#include "isoperim/quadrature.hpp"

namespace isoperim {

class iso_profile;  // profile.hpp

/// Spatial Schwarzschild slice of mass m: conformally flat metric
/// (1 + m/2r)^4 delta on r > 0 (n = 3).  Negative m is an experimental
/// regime and must be requested explicitly.
struct schwarzschild_metric {
  double mass = 1.0;
  int dim = 3;

  static schwarzschild_metric with_mass(double m);
  static schwarzschild_metric with_negative_mass(double m);  // explicit opt-in

  double horizon_radius() const { return mass > 0.0 ? mass / 2.0 : 0.0; }
  double horizon_area() const;  // 16 pi m^2 (0 for m <= 0)
};

/// Harmonic radial conformal factor v(r) = A + B / r^{n-2} of an
/// asymptotically flat end.
struct radial_conformal_end {
  double A = 1.0;
  double B = 0.0;
  int dim = 3;
};

/// Area of the symmetric sphere at coordinate radius r: 4 pi r^2 (1+m/2r)^4.
double sphere_area(const schwarzschild_metric& g, double r);

/// Volume enclosed between the horizon r = m/2 and radius r, by Simpson
/// quadrature of 4 pi s^2 (1+m/2s)^6.
double enclosed_volume(const schwarzschild_metric& g, double r);

/// Same quantity in closed form (polynomial + log antiderivative).
double enclosed_volume_closed_form(const schwarzschild_metric& g, double r);

/// Antiderivative of the radial volume element, valid on all of r > 0
/// (both sides of the neck); differences of it give shell volumes.
double volume_antiderivative(const schwarzschild_metric& g, double r);

/// Mean curvature H = (2r - m) / (r^2 (1+m/2r)^3); equals dA/dV.
double mean_curvature(const schwarzschild_metric& g, double r);

/// (A/16pi)^{1/2} (1 - A H^2 / 16pi); identically the mass parameter m.
double hawking_mass_sphere(const schwarzschild_metric& g, double r);

/// ADM mass (n-1) A B of the radial conformal end v = A + B/r^{n-2}.
double adm_mass_radial(const radial_conformal_end& end);

/// Height w = sqrt(8m(rho - 2m)) of the rotationally symmetric embedding
/// |(x,y,z)| = w^2/8m + 2m into R^4; rho is the areal radius (>= 2m).
double embedding_height(const schwarzschild_metric& g, double areal_radius);

/// dV/dr and dA/dr (used by profile constructors and oracles).
double sphere_area_dr(const schwarzschild_metric& g, double r);
double volume_element_dr(const schwarzschild_metric& g, double r);
/// d^2A/dV^2 in the volume parameterization, from closed forms in r.
double area_second_derivative(const schwarzschild_metric& g, double r);

/// Cone-capped Schwarzschild: replaces the region inside the symmetric
/// sphere at junction radius c (> m/2) by a cone matched in area and mean
/// curvature, in the gauge ds^2 = u(r)^{-2} dr^2 + u(r) r^2 dsigma^2 whose
/// volume element is flat.  u == a on the cone; outside, A(V) solves
/// A^2 A'' = 4 pi - (3/4) A'^2 A with the matched initial data.
struct cone_cap {
  double cone_factor = 0.0;     // a, in (0, 1)
  double junction_area = 0.0;   // A0
  double junction_volume = 0.0; // V0, measured from the cone tip
  double mass = 0.0;
  std::vector<double> v;        // integration grid on [V0, 100 V0]
  std::vector<double> area;     // A(V) along the grid
  std::vector<double> darea;    // A'(V) along the grid

  double u_bar(std::size_t i) const;        // A / ((36 pi)^{1/3} V^{2/3})
  double u_bar_derivative(std::size_t i) const;
};

cone_cap cone_cap_profile(const schwarzschild_metric& g, double junction_radius,
                          int steps = 2000);

/// The same construction as an iso_profile (V from the cone tip,
/// end descriptor none because of the volume offset).
iso_profile cone_cap_iso_profile(const cone_cap& c);

}  // namespace isoperim
