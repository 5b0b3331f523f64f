#include "isoperim/profile.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>

namespace isoperim {

namespace {

constexpr double pi = std::numbers::pi;

// Safeguarded Newton on a monotone function; f returns {value, derivative}.
double invert_monotone(const std::function<std::pair<double, double>(double)>& f,
                       double lo, double hi, double target, double tol = 1e-13) {
  auto [flo, dlo] = f(lo);
  auto [fhi, dhi] = f(hi);
  const bool increasing = fhi > flo;
  double a = lo, b = hi;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    auto [fx, dfx] = f(x);
    const double r = fx - target;
    if (std::abs(r) <= tol * (std::abs(target) + std::abs(fx) + 1e-300)) return x;
    if ((r > 0.0) == increasing)
      b = x;
    else
      a = x;
    double step = (dfx != 0.0) ? x - r / dfx : 0.5 * (a + b);
    if (!(step > a && step < b)) step = 0.5 * (a + b);
    if (std::abs(step - x) < 1e-16 * (std::abs(x) + 1.0)) return step;
    x = step;
  }
  return x;
}

void validate_samples(const std::vector<double>& v, const std::vector<double>& a) {
  if (v.size() < 4 || v.size() != a.size())
    throw std::invalid_argument("iso_profile: need >= 4 (V, A) samples");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || !std::isfinite(a[i]))
      throw std::invalid_argument("iso_profile: non-finite sample");
    if (v[i] < 0.0) throw std::invalid_argument("iso_profile: V must be >= 0");
    if (i > 0 && !(v[i] > v[i - 1]))
      throw std::invalid_argument("iso_profile: V must be strictly increasing");
    if (a[i] <= 0.0 && v[i] > 0.0)
      throw std::invalid_argument("iso_profile: A must be positive for V > 0");
  }
}

// The data model is C^1: reject slope corners.  A corner is a relative
// secant jump of order one that is an outlier against its neighbors;
// smooth data (including V^{2/3} cusp sampling and smooth extrema) decays
// gradually instead.
void reject_corners(const std::vector<double>& v, const std::vector<double>& a) {
  const std::size_t n = v.size();
  if (n < 8) return;
  std::vector<double> slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    slope[i] = (a[i + 1] - a[i]) / (v[i + 1] - v[i]);
  std::vector<double> rel(n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i)
    rel[i] = std::abs(slope[i + 1] - slope[i]) /
             (std::abs(slope[i + 1]) + std::abs(slope[i]) + 1e-300);
  for (std::size_t i = 1; i + 1 < rel.size(); ++i) {
    if (rel[i] > 0.2 && rel[i] > 25.0 * (rel[i - 1] + rel[i + 1]))
      throw std::invalid_argument(
          "iso_profile: corner discontinuity in A'(V) near V = " +
          std::to_string(v[i + 1]) + "; profiles must be C^1");
  }
}

}  // namespace

iso_profile iso_profile::from_samples(std::vector<double> v, std::vector<double> a,
                                      end_descriptor end) {
  validate_samples(v, a);
  reject_corners(v, a);
  iso_profile p;
  p.source_ = derivative_source::spline;
  p.end_ = end;
  p.horizon_area_ = (v.front() <= 1e-12 * (std::abs(v.back()) + 1.0)) ? a.front() : 0.0;
  p.spline_ = cubic_hermite(v, a, pchip_slopes(v, a));
  p.v_ = std::move(v);
  p.a_ = std::move(a);
  return p;
}

iso_profile iso_profile::from_analytic(std::vector<double> v_samples, analytic_fns fns,
                                       end_descriptor end) {
  if (!fns.area || !fns.darea || !fns.d2area)
    throw std::invalid_argument("iso_profile: analytic profile needs all three closures");
  std::vector<double> a(v_samples.size());
  for (std::size_t i = 0; i < v_samples.size(); ++i) a[i] = fns.area(v_samples[i]);
  validate_samples(v_samples, a);
  iso_profile p;
  p.source_ = derivative_source::analytic;
  p.end_ = end;
  p.fns_ = std::move(fns);
  p.horizon_area_ =
      (v_samples.front() <= 1e-12 * (std::abs(v_samples.back()) + 1.0)) ? a.front() : 0.0;
  p.v_ = std::move(v_samples);
  p.a_ = std::move(a);
  return p;
}

double iso_profile::check_domain(double v) const {
  if (v_.empty()) throw std::logic_error("iso_profile: empty profile");
  const double span = v_.back() - v_.front();
  const double slack = 1e-9 * span;
  if (v < v_.front() - slack || v > v_.back() + slack)
    throw std::domain_error("iso_profile: V outside the sampled range");
  return std::clamp(v, v_.front(), v_.back());
}

double iso_profile::area(double v) const {
  v = check_domain(v);
  return source_ == derivative_source::analytic ? fns_.area(v) : spline_.value(v);
}

double iso_profile::darea(double v) const {
  v = check_domain(v);
  return source_ == derivative_source::analytic ? fns_.darea(v) : spline_.derivative(v);
}

double iso_profile::d2area(double v) const {
  v = check_domain(v);
  return source_ == derivative_source::analytic ? fns_.d2area(v)
                                                : spline_.second_derivative(v);
}

double iso_profile::total_volume() const {
  if (!is_compact())
    throw std::logic_error("iso_profile: total_volume is defined for compact manifolds");
  return v_.back();
}

// ---- curvature and masses ----

double scalar_curvature(const iso_profile& p, double v) {
  const double a = p.area(v), ap = p.darea(v), app = p.d2area(v);
  return 8.0 * pi / a - 2.0 * a * app - 1.5 * ap * ap;
}

double ricci_normal(const iso_profile& p, double v) {
  const double a = p.area(v), ap = p.darea(v), app = p.d2area(v);
  return -a * app - 0.5 * ap * ap;
}

double ricci_tangential(const iso_profile& p, double v) {
  const double a = p.area(v), ap = p.darea(v), app = p.d2area(v);
  return 4.0 * pi / a - 0.5 * a * app - 0.5 * ap * ap;
}

double hawking_mass(const iso_profile& p, double v) {
  const double a = p.area(v), ap = p.darea(v);
  return std::sqrt(a / (16.0 * pi)) * (1.0 - a * ap * ap / (16.0 * pi));
}

double hawking_mass_f_form(const iso_profile& p, double v) {
  const double a = p.area(v), ap = p.darea(v);
  const double f = std::pow(a, 1.5);
  const double fp = 1.5 * std::sqrt(a) * ap;
  return std::cbrt(f) * (36.0 * pi - fp * fp) / (144.0 * std::pow(pi, 1.5));
}

mass_series compute_mass_series(const iso_profile& p, const comparison_config& cfg) {
  mass_series s;
  s.cfg = cfg;
  s.restriction_volume = p.is_compact() ? 0.5 * p.total_volume()
                                        : std::numeric_limits<double>::infinity();
  s.v = p.volumes();
  s.m.reserve(s.v.size());
  s.m_ric.reserve(s.v.size());
  s.m_r.reserve(s.v.size());
  for (double v : s.v) {
    const double a = p.area(v), ap = p.darea(v);
    const double f = std::pow(a, 1.5);
    const double fp = 1.5 * std::sqrt(a) * ap;
    const double ring = 36.0 * pi - fp * fp;
    s.m.push_back(std::sqrt(a / (16.0 * pi)) * (1.0 - a * ap * ap / (16.0 * pi)));
    s.m_ric.push_back(ring - 4.5 * cfg.epsilon * cfg.ric0 * std::cbrt(f * f));
    s.m_r.push_back(std::cbrt(f) * ring - 1.5 * cfg.r0 * f);
    if (!std::isfinite(s.m.back()) || !std::isfinite(s.m_ric.back()) ||
        !std::isfinite(s.m_r.back()))
      throw numerical_error("mass series: non-finite entry at V = " + std::to_string(v));
  }
  return s;
}

monotonicity_report check_monotone(const mass_series& s, mass_kind which, double tol) {
  const std::vector<double>* col = nullptr;
  bool restricted = false;
  switch (which) {
    case mass_kind::hawking: col = &s.m; break;
    case mass_kind::ricci: col = &s.m_ric; restricted = true; break;
    case mass_kind::scalar: col = &s.m_r; restricted = true; break;
  }
  monotonicity_report rep;
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.max_value = -rep.min_value;
  for (std::size_t i = 0; i < col->size(); ++i) {
    if (restricted && s.v[i] > s.restriction_volume) break;
    rep.min_value = std::min(rep.min_value, (*col)[i]);
    rep.max_value = std::max(rep.max_value, (*col)[i]);
    if (i + 1 < col->size() && !(restricted && s.v[i + 1] > s.restriction_volume) &&
        (*col)[i + 1] < (*col)[i] - tol)
      rep.violations.push_back(i);
  }
  rep.monotone = rep.violations.empty();
  return rep;
}

penrose_verdict penrose_check(const iso_profile& p, double tol) {
  if (p.end().k != end_descriptor::kind::schwarzschild)
    throw std::domain_error("penrose_check: profile is not asymptotically flat");
  penrose_verdict v;
  v.total_mass = p.end().mass;
  v.bound = std::sqrt(p.horizon_area() / (16.0 * pi));
  v.satisfied = v.total_mass >= v.bound - tol;
  return v;
}

double generalized_penrose_bound(const std::vector<double>& horizon_areas) {
  if (horizon_areas.empty())
    throw std::invalid_argument("generalized_penrose_bound: empty area list");
  double sum = 0.0;
  for (double a : horizon_areas) {
    if (!(a > 0.0))
      throw std::invalid_argument("generalized_penrose_bound: areas must be positive");
    sum += std::pow(a / (16.0 * pi), 1.5);
  }
  return std::cbrt(sum);
}

// ---- inverse mean curvature flow ----

imcf_record imcf_evolve(const iso_profile& p, double t_max, int steps,
                        std::optional<double> v_start) {
  if (steps < 1) throw std::invalid_argument("imcf_evolve: steps >= 1");
  if (!(t_max > 0.0)) throw std::invalid_argument("imcf_evolve: t_max > 0");

  double v0;
  if (v_start) {
    v0 = *v_start;
  } else if (p.horizon_area() > 0.0) {
    // Just outside the horizon (H = 0 exactly at it): bisect for the
    // volume where the area has grown by a relative 1e-6.
    const double target = p.horizon_area() * (1.0 + 1e-6);
    double lo = p.v_min(), hi = p.v_min() + 0.25 * (p.v_max() - p.v_min());
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (p.area(mid) < target ? lo : hi) = mid;
    }
    v0 = 0.5 * (lo + hi);
  } else {
    v0 = p.v_min() + 1e-6 * (p.v_max() - p.v_min());
  }

  // Integrate s = V^2 rather than V: near a minimal starting sphere the
  // flow leaves like V ~ sqrt(t), so the squared variable is the smooth
  // one.  The speed still diverges where H -> 0 further out; report the
  // crossing itself in that case.
  double last_good = v0;
  auto speed = [&](double s) -> double {
    const double v = std::sqrt(std::max(s, 0.0));
    const double h = p.darea(v);
    if (!(h > 0.0)) {
      double lo = last_good, hi = v;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p.darea(mid) > 0.0 ? lo : hi) = mid;
      }
      throw flow_breakdown(0.5 * (lo + hi));
    }
    last_good = std::max(last_good, v);
    return 2.0 * v * p.area(v) / h;
  };

  imcf_record rec;
  rec.start_volume = v0;
  const double dt = t_max / steps;
  double s = v0 * v0;
  auto push = [&](double t) {
    const double v = std::sqrt(s);
    rec.t.push_back(t);
    rec.v.push_back(v);
    rec.area.push_back(p.area(v));
    rec.mass.push_back(hawking_mass(p, v));
  };
  push(0.0);
  for (int i = 0; i < steps; ++i) {
    const double k1 = speed(s);
    const double k2 = speed(s + 0.5 * dt * k1);
    const double k3 = speed(s + 0.5 * dt * k2);
    const double k4 = speed(s + dt * k3);
    s += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (std::sqrt(s) > p.v_max())
      throw std::domain_error("imcf_evolve: flow reached the end of the profile data");
    speed(s);  // detect a crossing stepped over by the full update
    push((i + 1) * dt);
  }

  // Geroch check: the Hawking mass must not drop while R >= 0 holds.
  bool r_nonneg = true;
  for (double vv : rec.v) r_nonneg = r_nonneg && scalar_curvature(p, vv) >= -1e-9;
  for (std::size_t i = 0; i + 1 < rec.mass.size(); ++i) {
    const double drop = rec.mass[i] - rec.mass[i + 1];
    rec.max_mass_drop = std::max(rec.max_mass_drop, drop);
  }
  rec.geroch_flagged = r_nonneg && rec.max_mass_drop > 1e-8;
  return rec;
}

// ---- constructors ----

iso_profile schwarzschild_profile(const schwarzschild_metric& g, double r_max,
                                  int samples) {
  if (!(r_max > g.horizon_radius()))
    throw std::invalid_argument("schwarzschild_profile: r_max inside horizon");
  if (samples < 8) throw std::invalid_argument("schwarzschild_profile: samples >= 8");
  const double r0 = g.horizon_radius() > 0.0 ? g.horizon_radius() : r_max * 1e-6;
  const double v_hi = enclosed_volume_closed_form(g, r_max);

  auto r_of_v = [g, r0, r_max](double v) {
    return invert_monotone(
        [&](double r) {
          return std::make_pair(enclosed_volume_closed_form(g, r),
                                volume_element_dr(g, r));
        },
        r0, r_max * (1.0 + 1e-9), v);
  };

  iso_profile::analytic_fns fns;
  fns.area = [g, r_of_v](double v) { return sphere_area(g, r_of_v(v)); };
  fns.darea = [g, r_of_v](double v) { return mean_curvature(g, r_of_v(v)); };
  fns.d2area = [g, r_of_v](double v) { return area_second_derivative(g, r_of_v(v)); };

  std::vector<double> vs;
  vs.reserve(samples);
  if (g.mass > 0.0) {
    // A is flat in V at the horizon; quadratic clustering keeps the
    // sampled slopes accurate there.
    for (int i = 0; i < samples; ++i) {
      const double t = i / (samples - 1.0);
      const double r = r0 + (r_max - r0) * t * t;
      vs.push_back(i == 0 ? 0.0 : enclosed_volume_closed_form(g, r));
    }
  } else {
    for (int i = 1; i <= samples; ++i) vs.push_back(v_hi * i / samples);
  }
  auto end = end_descriptor::schwarzschild_end(g.mass);
  return iso_profile::from_analytic(std::move(vs), std::move(fns), end);
}

iso_profile flat_profile(double v_max, int samples) {
  if (!(v_max > 0.0)) throw std::invalid_argument("flat_profile: v_max > 0");
  iso_profile::analytic_fns fns;
  const double c = std::cbrt(36.0 * pi);
  fns.area = [c](double v) { return c * std::cbrt(v * v); };
  fns.darea = [c](double v) { return 2.0 / 3.0 * c / std::cbrt(v); };
  fns.d2area = [c](double v) { return -2.0 / 9.0 * c / std::cbrt(v * v * v * v); };
  std::vector<double> vs;
  vs.reserve(samples);
  for (int i = 1; i <= samples; ++i) vs.push_back(v_max * i / samples);
  return iso_profile::from_analytic(std::move(vs), std::move(fns),
                                    end_descriptor::schwarzschild_end(0.0));
}

namespace {

// Polar angle of the cap of volume v on the round 3-sphere of radius rho.
double sphere_theta_of_v(double rho, double v) {
  const double c = 2.0 * pi * rho * rho * rho;
  return invert_monotone(
      [&](double th) {
        return std::make_pair(c * (th - std::sin(th) * std::cos(th)),
                              2.0 * c * std::sin(th) * std::sin(th));
      },
      0.0, pi, v);
}

double cap_volume(double rho, double th) {
  return 2.0 * pi * rho * rho * rho * (th - std::sin(th) * std::cos(th));
}

}  // namespace

iso_profile round_sphere_profile(double radius, int samples) {
  if (!(radius > 0.0)) throw std::invalid_argument("round_sphere_profile: radius > 0");
  const double rho = radius;
  iso_profile::analytic_fns fns;
  fns.area = [rho](double v) {
    const double th = sphere_theta_of_v(rho, v);
    const double s = std::sin(th);
    return 4.0 * pi * rho * rho * s * s;
  };
  fns.darea = [rho](double v) {
    const double th = sphere_theta_of_v(rho, v);
    return 2.0 / (rho * std::tan(th));
  };
  fns.d2area = [rho](double v) {
    const double th = sphere_theta_of_v(rho, v);
    const double s = std::sin(th);
    return -1.0 / (2.0 * pi * rho * rho * rho * rho * s * s * s * s);
  };
  std::vector<double> vs;
  vs.reserve(samples);
  const double th_lo = 2e-3, th_hi = pi - 2e-3;
  for (int i = 0; i < samples; ++i) {
    const double th = th_lo + (th_hi - th_lo) * i / (samples - 1.0);
    vs.push_back(cap_volume(rho, th));
  }
  return iso_profile::from_analytic(std::move(vs), std::move(fns),
                                    end_descriptor::compact_end());
}

iso_profile counterexample_profile(double target_area, double total_mass, int samples) {
  const double m = total_mass;
  if (!(m > 0.0)) throw std::invalid_argument("counterexample_profile: mass > 0");
  if (!(target_area > 16.0 * pi * m * m))
    throw std::invalid_argument(
        "counterexample_profile: target_area must exceed 16 pi m^2");

  const auto g = schwarzschild_metric::with_mass(m);
  const double rho = std::sqrt(target_area / (4.0 * pi));
  // Junction past the equator where the cap's Hawking mass (rho/2) sin^3
  // theta reaches m; area and mean curvature then match the far branch.
  const double sin_j = std::cbrt(2.0 * m / rho);
  const double theta_j = pi - std::asin(sin_j);
  const double area_j = 4.0 * pi * rho * rho * sin_j * sin_j;
  const double v_j = cap_volume(rho, theta_j);

  // Far-branch radius with the same area (r < m/2; area decreasing in r).
  const double r_j = invert_monotone(
      [&](double r) {
        return std::make_pair(sphere_area(g, r), sphere_area_dr(g, r));
      },
      1e-6 * m, g.horizon_radius(), area_j);

  auto vol_piece2 = [g, v_j, r_j](double r) {
    return v_j + volume_antiderivative(g, r) - volume_antiderivative(g, r_j);
  };
  const double r_max = std::max(10.0 * m, 3.0 * rho);

  auto r_of_v = [=](double v) {
    return invert_monotone(
        [&](double r) {
          return std::make_pair(vol_piece2(r), volume_element_dr(g, r));
        },
        r_j, r_max * (1.0 + 1e-9), v);
  };

  iso_profile::analytic_fns fns;
  fns.area = [=](double v) {
    if (v <= v_j) {
      const double th = sphere_theta_of_v(rho, v);
      const double s = std::sin(th);
      return 4.0 * pi * rho * rho * s * s;
    }
    return sphere_area(g, r_of_v(v));
  };
  fns.darea = [=](double v) {
    if (v <= v_j) return 2.0 / (rho * std::tan(sphere_theta_of_v(rho, v)));
    return mean_curvature(g, r_of_v(v));
  };
  fns.d2area = [=](double v) {
    if (v <= v_j) {
      const double s = std::sin(sphere_theta_of_v(rho, v));
      return -1.0 / (2.0 * pi * rho * rho * rho * rho * s * s * s * s);
    }
    return area_second_derivative(g, r_of_v(v));
  };

  // Sample the cap uniformly in theta, the Schwarzschild part uniformly
  // in r; strictly increasing V across the junction.
  std::vector<double> vs;
  vs.reserve(samples);
  const int n_cap = samples / 2;
  for (int i = 1; i <= n_cap; ++i) {
    const double th = 2e-3 + (theta_j - 2e-3) * i / (n_cap + 1.0);
    vs.push_back(cap_volume(rho, th));
  }
  const int n_out = samples - n_cap;
  for (int i = 1; i <= n_out; ++i) {
    const double r = r_j + (r_max - r_j) * i / static_cast<double>(n_out);
    vs.push_back(vol_piece2(r));
  }
  return iso_profile::from_analytic(std::move(vs), std::move(fns),
                                    end_descriptor::schwarzschild_end(m));
}

iso_profile random_nonneg_curvature_profile(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double m0 = 0.5 + u01(rng);              // horizon mass
  const double dm = (0.05 + 0.75 * u01(rng)) * m0;  // mass carried by the bump
  const double m_tot = m0 + dm;

  const auto g0 = schwarzschild_metric::with_mass(m0);
  const auto g1 = schwarzschild_metric::with_mass(m_tot);

  // Piece 1: exact Schwarzschild(m0) until A = 64 pi m_tot^2, which keeps
  // 1 - m(V) sqrt(16 pi / A) >= 1/2 along the ramp.
  const double a_ramp = 64.0 * pi * m_tot * m_tot;
  const double r1 = invert_monotone(
      [&](double r) {
        return std::make_pair(sphere_area(g0, r), sphere_area_dr(g0, r));
      },
      g0.horizon_radius(), 100.0 * (m0 + 1.0), a_ramp);
  const double v1 = enclosed_volume_closed_form(g0, r1);
  const double ramp_len = (0.5 + u01(rng)) * v1;

  // C^2 mass ramp m(V).
  auto mass_of = [=](double v) {
    if (v <= v1) return m0;
    if (v >= v1 + ramp_len) return m_tot;
    const double t = (v - v1) / ramp_len;
    return m0 + dm * t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
  };
  auto dmass_of = [=](double v) {
    if (v <= v1 || v >= v1 + ramp_len) return 0.0;
    const double t = (v - v1) / ramp_len;
    return dm * (30.0 * t * t * (1.0 - t) * (1.0 - t)) / ramp_len;
  };

  // dA/dV with prescribed Hawking mass: the mass-derivative relation of
  // the profile read backwards.
  auto slope = [mass_of](double v, double a) {
    const double root = std::sqrt(16.0 * pi / a);
    return std::sqrt(16.0 * pi / a * (1.0 - mass_of(v) * root));
  };
  auto curv = [mass_of, dmass_of](double v, double a, double ap) {
    // A'' from differentiating A'^2 = 16 pi/A - 16 pi m(V) (16 pi)^{1/2} A^{-3/2}.
    const double c = 16.0 * pi * std::sqrt(16.0 * pi);
    return (-16.0 * pi / (a * a) * ap + 1.5 * c * mass_of(v) * std::pow(a, -2.5) * ap -
            c * dmass_of(v) * std::pow(a, -1.5)) /
           (2.0 * ap);
  };

  // Piece 2: RK4 over the ramp, exact slopes stored for the Hermite.
  const int n2 = 2000;
  std::vector<double> pv{v1}, pa{sphere_area(g0, r1)};
  const double h = ramp_len / n2;
  double a = pa[0];
  for (int i = 0; i < n2; ++i) {
    const double v = v1 + i * h;
    const double k1 = slope(v, a);
    const double k2 = slope(v + 0.5 * h, a + 0.5 * h * k1);
    const double k3 = slope(v + 0.5 * h, a + 0.5 * h * k2);
    const double k4 = slope(v + h, a + h * k3);
    a += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    pv.push_back(v1 + (i + 1) * h);
    pa.push_back(a);
  }
  std::vector<double> pd(pv.size());
  for (std::size_t i = 0; i < pv.size(); ++i) pd[i] = slope(pv[i], pa[i]);
  auto ramp_interp = std::make_shared<cubic_hermite>(pv, pa, pd);

  // Piece 3: exact Schwarzschild(m_tot) with a volume offset.
  const double v2 = v1 + ramp_len;
  const double a2 = pa.back();
  const double r2 = invert_monotone(
      [&](double r) {
        return std::make_pair(sphere_area(g1, r), sphere_area_dr(g1, r));
      },
      g1.horizon_radius(), 100.0 * (m_tot + 1.0), a2);
  const double v2_tilde = enclosed_volume_closed_form(g1, r2);
  const double offset = v2_tilde - v2;
  const double r_max = 3.0 * r2;
  const double v_end = enclosed_volume_closed_form(g1, r_max) - offset;

  auto r_of_v1 = [=](double v) {
    return invert_monotone(
        [&](double r) {
          return std::make_pair(enclosed_volume_closed_form(g0, r),
                                volume_element_dr(g0, r));
        },
        g0.horizon_radius(), r1 * (1.0 + 1e-9), v);
  };
  auto r_of_v3 = [=](double v) {
    return invert_monotone(
        [&](double r) {
          return std::make_pair(enclosed_volume_closed_form(g1, r),
                                volume_element_dr(g1, r));
        },
        g1.horizon_radius(), r_max * (1.0 + 1e-9), v + offset);
  };

  iso_profile::analytic_fns fns;
  fns.area = [=](double v) {
    if (v <= v1) return sphere_area(g0, r_of_v1(v));
    if (v < v2) return ramp_interp->value(v);
    return sphere_area(g1, r_of_v3(v));
  };
  fns.darea = [=](double v) {
    if (v <= v1) return mean_curvature(g0, r_of_v1(v));
    if (v < v2) return slope(v, ramp_interp->value(v));
    return mean_curvature(g1, r_of_v3(v));
  };
  fns.d2area = [=](double v) {
    if (v <= v1) return area_second_derivative(g0, r_of_v1(v));
    if (v < v2) {
      const double av = ramp_interp->value(v);
      return curv(v, av, slope(v, av));
    }
    return area_second_derivative(g1, r_of_v3(v));
  };

  std::vector<double> vs;
  const int n_each = 160;
  const double rh = g0.horizon_radius();
  vs.push_back(0.0);
  for (int i = 1; i <= n_each; ++i)
    vs.push_back(enclosed_volume_closed_form(g0, rh + (r1 - rh) * i / (n_each + 1.0)));
  for (int i = 0; i <= n_each; ++i) vs.push_back(v1 + ramp_len * i / (n_each + 0.5));
  for (int i = 1; i <= n_each; ++i)
    vs.push_back(v2 + (v_end - v2) * i / static_cast<double>(n_each));
  return iso_profile::from_analytic(std::move(vs), std::move(fns),
                                    end_descriptor::schwarzschild_end(m_tot));
}

// ---- metric round trip ----

radial_metric build_metric(const iso_profile& p) {
  radial_metric m;
  m.v = p.volumes();
  m.area = p.areas();
  m.g_vv.reserve(m.v.size());
  for (double a : m.area) m.g_vv.push_back(1.0 / (a * a));
  return m;
}

iso_profile from_metric(const radial_metric& m, end_descriptor end) {
  if (m.v.size() != m.area.size() || m.v.size() != m.g_vv.size())
    throw std::invalid_argument("from_metric: mismatched columns");
  for (std::size_t i = 0; i < m.v.size(); ++i) {
    const double expect = 1.0 / (m.area[i] * m.area[i]);
    if (std::abs(m.g_vv[i] - expect) > 1e-6 * expect)
      throw std::invalid_argument("from_metric: metric is not in the volume gauge");
  }
  return iso_profile::from_samples(m.v, m.area, end);
}

iso_profile from_metric(const std::vector<double>& r, const std::vector<double>& u,
                        end_descriptor end) {
  if (r.size() != u.size()) throw std::invalid_argument("from_metric: size mismatch");
  std::vector<double> v(r.size()), a(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(u[i] > 0.0)) throw std::invalid_argument("from_metric: u must be positive");
    v[i] = 4.0 / 3.0 * pi * r[i] * r[i] * r[i];
    a[i] = 4.0 * pi * u[i] * r[i] * r[i];
  }
  return iso_profile::from_samples(std::move(v), std::move(a), end);
}

}  // namespace isoperim
