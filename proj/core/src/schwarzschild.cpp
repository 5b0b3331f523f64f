#include "isoperim/schwarzschild.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isoperim/profile.hpp"

namespace isoperim {

namespace {
constexpr double pi = std::numbers::pi;

double conformal(const schwarzschild_metric& g, double r) {
  return g.mass == 0.0 ? 1.0 : 1.0 + g.mass / (2.0 * r);
}
}  // namespace

schwarzschild_metric schwarzschild_metric::with_mass(double m) {
  if (m < 0.0)
    throw std::invalid_argument(
        "negative mass requires schwarzschild_metric::with_negative_mass");
  return {m, 3};
}

schwarzschild_metric schwarzschild_metric::with_negative_mass(double m) {
  return {m, 3};
}

double schwarzschild_metric::horizon_area() const {
  return mass > 0.0 ? 16.0 * pi * mass * mass : 0.0;
}

double sphere_area(const schwarzschild_metric& g, double r) {
  if (!(r > 0.0)) throw std::domain_error("sphere_area: r must be positive");
  const double phi = conformal(g, r);
  return 4.0 * pi * r * r * phi * phi * phi * phi;
}

double sphere_area_dr(const schwarzschild_metric& g, double r) {
  const double phi = conformal(g, r);
  return 8.0 * pi * phi * phi * phi * (r - g.mass / 2.0);
}

double volume_element_dr(const schwarzschild_metric& g, double r) {
  const double phi = conformal(g, r);
  const double p2 = phi * phi;
  return 4.0 * pi * r * r * p2 * p2 * p2;
}

double volume_antiderivative(const schwarzschild_metric& g, double r) {
  if (!(r > 0.0)) throw std::domain_error("volume_antiderivative: r must be positive");
  if (g.mass == 0.0) return 4.0 * pi * r * r * r / 3.0;
  const double q = g.mass / 2.0;
  const double q2 = q * q, q3 = q2 * q;
  const double P = r * r * r / 3.0 + 3.0 * q * r * r + 15.0 * q2 * r +
                   20.0 * q3 * std::log(r) - 15.0 * q2 * q2 / r -
                   3.0 * q2 * q3 / (r * r) - q3 * q3 / (3.0 * r * r * r);
  return 4.0 * pi * P;
}

double enclosed_volume_closed_form(const schwarzschild_metric& g, double r) {
  if (!(r >= g.horizon_radius()))
    throw std::domain_error("enclosed_volume: inside horizon");
  if (g.mass == 0.0) return 4.0 * pi * r * r * r / 3.0;
  return volume_antiderivative(g, r) - volume_antiderivative(g, g.horizon_radius());
}

double enclosed_volume(const schwarzschild_metric& g, double r) {
  if (!(r >= g.horizon_radius()))
    throw std::domain_error("enclosed_volume: inside horizon");
  if (r == g.horizon_radius()) return 0.0;
  return integrate_smooth([&](double s) { return volume_element_dr(g, s); },
                          g.horizon_radius(), r, 10000);
}

double mean_curvature(const schwarzschild_metric& g, double r) {
  if (!(r > 0.0)) throw std::domain_error("mean_curvature: r must be positive");
  const double phi = conformal(g, r);
  return (2.0 * r - g.mass) / (r * r * phi * phi * phi);
}

double area_second_derivative(const schwarzschild_metric& g, double r) {
  // d^2A/dV^2 = (dH/dr) / (dV/dr), all in closed form.
  const double m = g.mass;
  const double phi = conformal(g, r);
  const double dh_dr =
      (1.0 / (phi * phi * phi * r * r * r)) *
      (-2.0 * r + 2.0 * m + 3.0 * m * (2.0 * r - m) / (2.0 * r + m));
  return dh_dr / volume_element_dr(g, r);
}

double hawking_mass_sphere(const schwarzschild_metric& g, double r) {
  const double a = sphere_area(g, r);
  const double h = mean_curvature(g, r);
  return std::sqrt(a / (16.0 * pi)) * (1.0 - a * h * h / (16.0 * pi));
}

double adm_mass_radial(const radial_conformal_end& end) {
  return (end.dim - 1) * end.A * end.B;
}

double embedding_height(const schwarzschild_metric& g, double areal_radius) {
  if (!(g.mass > 0.0)) throw std::domain_error("embedding_height: needs m > 0");
  if (!(areal_radius >= 2.0 * g.mass))
    throw std::domain_error("embedding_height: areal radius below the neck");
  return std::sqrt(8.0 * g.mass * (areal_radius - 2.0 * g.mass));
}

// ---- cone cap ----

double cone_cap::u_bar(std::size_t i) const {
  const double vv = v.at(i);
  return area.at(i) / (std::cbrt(36.0 * pi) * std::cbrt(vv * vv));
}

double cone_cap::u_bar_derivative(std::size_t i) const {
  const double vv = v.at(i);
  return (darea.at(i) - 2.0 / 3.0 * area.at(i) / vv) /
         (std::cbrt(36.0 * pi) * std::cbrt(vv * vv));
}

cone_cap cone_cap_profile(const schwarzschild_metric& g, double junction_radius,
                          int steps) {
  if (!(g.mass > 0.0))
    throw std::domain_error("cone_cap_profile: construction needs m > 0");
  if (!(junction_radius > g.horizon_radius()))
    throw std::domain_error("cone_cap_profile: junction must lie outside the horizon");
  if (steps < 2) throw std::invalid_argument("cone_cap_profile: steps >= 2");

  cone_cap out;
  out.mass = g.mass;
  out.junction_area = sphere_area(g, junction_radius);
  const double h0 = mean_curvature(g, junction_radius);
  const double hha = h0 * h0 * out.junction_area;
  if (!(hha < 16.0 * pi))
    throw numerical_error("cone_cap_profile: H^2 A >= 16 pi at the junction");

  // Matching area and mean curvature from inside forces the cone factor:
  // H_in = sqrt(16 pi a^3 / A0) = H0, i.e. a^3 = A0 H0^2 / 16 pi,
  // which equals 1 - m sqrt(16 pi / A0) by the Hawking-mass identity.
  out.cone_factor = std::cbrt(hha / (16.0 * pi));
  const double cbar = std::sqrt(out.junction_area / (4.0 * pi * out.cone_factor));
  out.junction_volume = 4.0 / 3.0 * pi * cbar * cbar * cbar;

  // Outside the junction, A(V) satisfies A^2 A'' = 4 pi - (3/4) A'^2 A
  // with the matched initial data; fixed-step RK4 on [V0, 100 V0].
  const double v0 = out.junction_volume;
  const double v1 = 100.0 * v0;
  const double h = (v1 - v0) / steps;
  auto acc = [](double a, double ap) {
    return (4.0 * pi - 0.75 * ap * ap * a) / (a * a);
  };
  double a = out.junction_area, ap = h0, vv = v0;
  out.v.reserve(steps + 1);
  out.area.reserve(steps + 1);
  out.darea.reserve(steps + 1);
  out.v.push_back(vv);
  out.area.push_back(a);
  out.darea.push_back(ap);
  for (int i = 0; i < steps; ++i) {
    const double k1a = ap, k1p = acc(a, ap);
    const double k2a = ap + 0.5 * h * k1p, k2p = acc(a + 0.5 * h * k1a, ap + 0.5 * h * k1p);
    const double k3a = ap + 0.5 * h * k2p, k3p = acc(a + 0.5 * h * k2a, ap + 0.5 * h * k2p);
    const double k4a = ap + h * k3p, k4p = acc(a + h * k3a, ap + h * k3p);
    a += h / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
    ap += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
    vv = v0 + (i + 1) * h;
    out.v.push_back(vv);
    out.area.push_back(a);
    out.darea.push_back(ap);
  }
  return out;
}

iso_profile cone_cap_iso_profile(const cone_cap& c) {
  // Inside the junction the metric is a cone: A = a (36 pi)^{1/3} V^{2/3}.
  std::vector<double> v, a;
  const int inner = 64;
  for (int i = 1; i <= inner; ++i) {
    const double vv = c.junction_volume * i / (inner + 1);
    v.push_back(vv);
    a.push_back(c.cone_factor * std::cbrt(36.0 * pi) * std::cbrt(vv * vv));
  }
  v.insert(v.end(), c.v.begin(), c.v.end());
  a.insert(a.end(), c.area.begin(), c.area.end());
  return iso_profile::from_samples(std::move(v), std::move(a),
                                   end_descriptor::open_end());
}

}  // namespace isoperim
