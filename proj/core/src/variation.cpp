#include "isoperim/variation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isoperim {

namespace {

constexpr double pi = std::numbers::pi;

// Geometry of the probe sphere at normal distance s from the base point.
struct sphere_state {
  double area, mean_curv, ric_normal;
};

// Radial arclength of the Schwarzschild slice: \int (1+m/2r)^2 dr.
double arclength(double m, double r) {
  return r + m * std::log(r) - m * m / (4.0 * r);
}

double radius_at_distance(const schwarzschild_metric& g, double r0, double s) {
  const double target = arclength(g.mass, r0) + s;
  double r = std::max(r0 + s, 1e-8);  // arclength grows slightly faster than r
  for (int i = 0; i < 100; ++i) {
    const double phi = 1.0 + g.mass / (2.0 * r);
    const double step = (arclength(g.mass, r) - target) / (phi * phi);
    r -= step;
    if (std::abs(step) < 1e-15 * (std::abs(r) + 1.0)) break;
    if (r <= 0.0) r = 1e-12;
  }
  return r;
}

sphere_state state_at(const flow_probe& p, double s) {
  switch (p.kind) {
    case flow_probe::space::flat: {
      const double r = p.base + s;
      if (!(r > 0.0)) throw std::out_of_range("flow probe: flow left the flat chart");
      return {4.0 * pi * r * r, 2.0 / r, 0.0};
    }
    case flow_probe::space::round_sphere: {
      const double rho = p.sphere_radius;
      const double th = p.base + s / rho;
      if (!(th > 0.0 && th < pi))
        throw std::out_of_range("flow probe: flow left the sphere chart");
      const double sn = std::sin(th);
      return {4.0 * pi * rho * rho * sn * sn, 2.0 / (rho * std::tan(th)),
              2.0 / (rho * rho)};
    }
    case flow_probe::space::schwarzschild_slice: {
      const auto g = schwarzschild_metric{p.mass, 3};
      const double r = radius_at_distance(g, p.base, s);
      const double a = sphere_area(g, r);
      const double h = mean_curvature(g, r);
      const double ric = -a * area_second_derivative(g, r) - 0.5 * h * h;
      return {a, h, ric};
    }
  }
  throw std::logic_error("flow probe: unknown space");
}

double areal_radius(const flow_probe& p) {
  return std::sqrt(state_at(p, 0.0).area / (4.0 * pi));
}

variation_report run_check(const flow_probe& p, bool second) {
  if (p.dt_fractions.size() < 2)
    throw std::invalid_argument("flow probe: need at least two dt values");
  for (std::size_t i = 1; i < p.dt_fractions.size(); ++i)
    if (!(p.dt_fractions[i] < p.dt_fractions[i - 1]))
      throw std::invalid_argument("flow probe: dt list must be strictly decreasing");

  const sphere_state base = state_at(p, 0.0);
  const double scale = areal_radius(p);

  variation_report rep;
  rep.predicted = second ? (-0.5 * base.mean_curv * base.mean_curv - base.ric_normal)
                         : base.mean_curv * base.area;
  double ref = std::abs(rep.predicted) + (second ? 1.0 / (scale * scale) : base.area / scale);

  for (double frac : p.dt_fractions) {
    const double dt = frac * scale;
    const sphere_state fwd = state_at(p, dt);
    const sphere_state bwd = state_at(p, -dt);
    const double measured = second ? (fwd.mean_curv - bwd.mean_curv) / (2.0 * dt)
                                   : (fwd.area - bwd.area) / (2.0 * dt);
    rep.dt.push_back(dt);
    rep.error.push_back(std::abs(measured - rep.predicted));
    rep.measured = measured;
  }

  rep.exact = true;
  for (double e : rep.error) rep.exact = rep.exact && e <= 1e-11 * ref;
  if (!rep.exact) {
    double sum = 0.0;
    int cnt = 0;
    for (std::size_t i = 0; i + 1 < rep.error.size(); ++i) {
      if (rep.error[i + 1] <= 0.0) continue;
      sum += std::log2(rep.error[i] / rep.error[i + 1]) /
             std::log2(rep.dt[i] / rep.dt[i + 1]);
      ++cnt;
    }
    rep.order = cnt ? sum / cnt : 0.0;
  }
  return rep;
}

}  // namespace

variation_report first_variation_check(const flow_probe& probe) {
  return run_check(probe, false);
}

variation_report second_variation_check(const flow_probe& probe) {
  return run_check(probe, true);
}

double probe_ricci_normal(const flow_probe& probe) {
  return state_at(probe, 0.0).ric_normal;
}

double gauss_ricci_normal(const flow_probe& probe) {
  const sphere_state st = state_at(probe, 0.0);
  double scalar = 0.0;
  switch (probe.kind) {
    case flow_probe::space::flat: scalar = 0.0; break;
    case flow_probe::space::round_sphere:
      scalar = 6.0 / (probe.sphere_radius * probe.sphere_radius);
      break;
    case flow_probe::space::schwarzschild_slice: scalar = 0.0; break;
  }
  const double k_gauss = 4.0 * pi / st.area;
  const double pi_norm2 = 0.5 * st.mean_curv * st.mean_curv;  // umbilic
  return 0.5 * scalar - k_gauss + 0.5 * st.mean_curv * st.mean_curv - 0.5 * pi_norm2;
}

cmc_pair_report cmc_pair_area_rate(const flow_probe& probe, double base2) {
  flow_probe p2 = probe;
  p2.base = base2;
  const sphere_state s1 = state_at(probe, 0.0);
  const sphere_state s2 = state_at(p2, 0.0);
  const double ratio = s1.area / s2.area;

  cmc_pair_report rep;
  rep.predicted_rate = s1.area * (s1.mean_curv - s2.mean_curv);
  rep.volume_rate = s1.area * 1.0 + s2.area * (-ratio);

  const double dt = 1e-5 * areal_radius(probe);
  auto total = [&](double t) {
    return state_at(probe, t).area + state_at(p2, -ratio * t).area;
  };
  rep.measured_rate = (total(dt) - total(-dt)) / (2.0 * dt);
  return rep;
}

}  // namespace isoperim
