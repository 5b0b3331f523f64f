#include "isoperim/phase_plane.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace isoperim {

namespace {
constexpr double pi = std::numbers::pi;

double exact_half_gamma(int n) {
  // Gamma(n/2) for integer n >= 1.
  if (n % 2 == 0) {
    double g = 1.0;
    for (int k = 2; k < n / 2 + 1; ++k) g *= (k - 1);
    return g;
  }
  double g = std::sqrt(pi);  // Gamma(1/2)
  for (int k = 1; 2 * k < n; ++k) g *= (2.0 * k - 1.0) / 2.0;
  return g;
}
}  // namespace

comparison_config comparison_config::for_scale(double eps, double r0) {
  if (!(r0 > 0.0)) throw std::invalid_argument("comparison_config: r0 > 0");
  comparison_config c;
  c.epsilon = eps;
  c.r0 = r0;
  c.ric0 = r0 / 3.0;
  c.v0 = 2.0 * pi * pi * std::pow(6.0 / r0, 1.5);
  return c;
}

double unit_sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("unit_sphere_area: n >= 1");
  return 2.0 * std::pow(pi, n / 2.0) / exact_half_gamma(n);
}

special_points_t special_points(const comparison_config& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0))
    throw std::domain_error("special_points: epsilon in (0, 1]");
  const double denom = cfg.r0 - 2.0 * cfg.epsilon * cfg.ric0;
  if (!(denom > 0.0)) throw std::domain_error("special_points: r0 <= 2 eps ric0");
  return {std::pow(24.0 * pi / cfg.r0, 1.5), std::pow(8.0 * pi / denom, 1.5)};
}

double phase_path::y_squared(double x) const {
  const double kappa = 4.5 * cfg.epsilon * cfg.ric0;
  if (kind == path_case::one)
    return kappa * (std::cbrt(x0 * x0) - std::cbrt(x * x));
  if (x <= x1 && kind == path_case::two)
    return 36.0 * pi - c2 - kappa * std::cbrt(x * x);
  const double inner = (c1 == 0.0) ? 0.0 : c1 / std::cbrt(x);
  return 36.0 * pi - inner - 1.5 * cfg.r0 * std::cbrt(x * x);
}

double phase_path::y_squared_derivative(double x) const {
  const double kappa = 4.5 * cfg.epsilon * cfg.ric0;
  if (kind == path_case::one || (kind == path_case::two && x <= x1))
    return -2.0 / 3.0 * kappa / std::cbrt(x);
  const double inner = (c1 == 0.0) ? 0.0 : c1 / (3.0 * std::cbrt(x * x * x * x));
  return inner - cfg.r0 / std::cbrt(x);
}

double phase_path::y_squared_second_derivative(double x) const {
  const double kappa = 4.5 * cfg.epsilon * cfg.ric0;
  const double x43 = std::cbrt(x * x * x * x);
  if (kind == path_case::one || (kind == path_case::two && x <= x1))
    return 2.0 / 9.0 * kappa / x43;
  const double inner = (c1 == 0.0) ? 0.0 : -4.0 * c1 / (9.0 * x43 * x);
  return inner + cfg.r0 / (3.0 * x43);
}

double phase_path::y_of(double x) const {
  const double yy = y_squared(x);
  if (yy < -1e-12 * 36.0 * pi)
    throw numerical_error("phase path: invalid path (negative radicand)");
  return std::sqrt(std::max(yy, 0.0));
}

phase_path gamma(double x0, const comparison_config& cfg, int samples) {
  if (!(x0 > 0.0)) throw std::domain_error("gamma: x0 must be positive");
  const auto sp = special_points(cfg);
  if (x0 > sp.x_s * (1.0 + 1e-12))
    throw numerical_error("gamma: no admissible path terminates beyond x_S");

  phase_path p;
  p.cfg = cfg;
  p.x0 = std::min(x0, sp.x_s);

  if (x0 >= sp.x_s * (1.0 - 1e-12)) {
    p.kind = path_case::three;
    p.c1 = p.c2 = p.x1 = 0.0;
  } else if (x0 <= sp.x_fb * (1.0 + 1e-12)) {
    p.kind = path_case::one;
  } else {
    p.kind = path_case::two;
    const double delta = cfg.r0 - 3.0 * cfg.epsilon * cfg.ric0;
    p.c1 = std::cbrt(x0) * (36.0 * pi - 1.5 * cfg.r0 * std::cbrt(x0 * x0));
    p.x1 = p.c1 / (3.0 * delta);
    p.c2 = 1.5 * std::cbrt(3.0 * delta * p.c1 * p.c1);
  }

  p.xs.reserve(samples);
  p.ys.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = p.x0 * i / (samples - 1.0);
    p.xs.push_back(x);
    p.ys.push_back(p.y_of(x));
  }
  return p;
}

namespace {

// Two-term square-root closure of \int_{x0-len}^{x0} dx/y near the
// terminal root: y^2 = |g'| u (1 + beta u), u = x0 - x.
double terminal_tail(const phase_path& path, double len) {
  const double gp = -path.y_squared_derivative(path.x0);
  const double beta = path.y_squared_second_derivative(path.x0) / (2.0 * gp);
  return (2.0 * std::sqrt(len) - beta / 3.0 * std::pow(len, 1.5)) / std::sqrt(gp);
}

}  // namespace

double sqrt_cap_integral(double D, double kappa, double X) {
  if (X == 0.0) return 0.0;
  if (!(D > 0.0) || !(kappa > 0.0) || !(X > 0.0))
    throw std::invalid_argument("sqrt_cap_integral: D, kappa, X must be positive");
  double arg = kappa * std::cbrt(X * X) / D;
  if (arg > 1.0 + 1e-10)
    throw numerical_error("sqrt_cap_integral: radicand negative at the endpoint");
  arg = std::min(arg, 1.0);
  const double phi = std::asin(std::sqrt(arg));
  return 1.5 * D * std::pow(kappa, -1.5) * (phi - std::sin(phi) * std::cos(phi));
}

double path_volume(const phase_path& path, int panels) {
  const auto& cfg = path.cfg;
  const double kappa = 4.5 * cfg.epsilon * cfg.ric0;
  if (path.kind == path_case::one)
    return std::cbrt(path.x0 * path.x0) / std::sqrt(kappa) * (3.0 * pi / 4.0);

  double inner = 0.0;
  if (path.x1 > 0.0) inner = sqrt_cap_integral(36.0 * pi - path.c2, kappa, path.x1);

  // Outer branch: y vanishes like a square root at x0.  A short branch
  // is closed by the square-root asymptotics directly.
  const double k_sub = 1.0 / std::sqrt(1.5 * cfg.r0 * std::cbrt(path.x0 * path.x0) - 12.0 * pi);
  if (path.x0 - path.x1 < 1e-4 * path.x0)
    return inner + terminal_tail(path, path.x0 - path.x1);
  singular_integrand si;
  si.end = singular_end::right;
  si.subtraction_coefficient = k_sub;
  si.f = [&path](double x) {
    const double yy = path.y_squared(x);
    if (yy < -1e-12 * 36.0 * pi)
      throw numerical_error("path_volume: invalid path (negative radicand)");
    return yy <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(yy);
  };
  return inner + integrate_right_singular(si, path.x1, path.x0, panels);
}

double bishop_halfvolume(int dim, double ric0, int panels) {
  if (dim < 2) throw std::invalid_argument("bishop_halfvolume: dimension >= 2");
  if (!(ric0 > 0.0)) throw std::invalid_argument("bishop_halfvolume: ric0 > 0");
  const double n = dim;
  const double omega = unit_sphere_area(dim);

  singular_integrand si;
  si.end = singular_end::right;
  si.subtraction_coefficient = std::sqrt(n / 2.0);  // g = 1 - z^{2/n}, g'(1) = -2/n
  si.f = [n](double z) {
    const double g = 1.0 - std::pow(z, 2.0 / n);
    return g <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(g);
  };
  const double integral = integrate_right_singular(si, 0.0, 1.0, panels);

  const double pref = std::pow(n * n * std::pow(omega, 2.0 / (n - 1.0)), (n - 1.0) / 2.0) *
                      std::pow((n - 1.0) / (n * n * ric0), n / 2.0);
  return pref * integral;
}

namespace {

// Golden-section maximization on [a, b].
double golden_max(const std::function<double(double)>& f, double a, double b, int iters) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

football_result football_profile(const comparison_config& cfg, int panels) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0))
    throw std::domain_error("football_profile: epsilon in (0, 1]");
  const auto sp = special_points(cfg);

  auto w_of = [&](double x0) { return path_volume(gamma(x0, cfg), panels); };

  double x_bar = sp.x_s;
  bool boundary = true;
  if (sp.x_s - sp.x_fb > 1e-12 * sp.x_s) {
    const int n_scan = 256;
    std::vector<double> xs(n_scan), ws(n_scan);
    for (int i = 0; i < n_scan; ++i) {
      xs[i] = sp.x_fb + (sp.x_s - sp.x_fb) * i / (n_scan - 1.0);
      ws[i] = w_of(xs[i]);
    }
    // Candidates: both endpoints, the two best interior local maxima,
    // and the endpoint-adjacent cells (the spike can hide inside one).
    double best_x = ws[0] >= ws[n_scan - 1] ? xs[0] : xs[n_scan - 1];
    double best_w = std::max(ws[0], ws[n_scan - 1]);
    std::vector<std::pair<double, int>> locals;
    for (int i = 1; i + 1 < n_scan; ++i)
      if (ws[i] >= ws[i - 1] && ws[i] >= ws[i + 1]) locals.push_back({ws[i], i});
    std::sort(locals.rbegin(), locals.rend());
    if (locals.size() > 2) locals.resize(2);
    std::vector<std::pair<double, double>> brackets;
    for (auto [w0, i] : locals) brackets.push_back({xs[i - 1], xs[i + 1]});
    brackets.push_back({xs[0], xs[1]});
    brackets.push_back({xs[n_scan - 2], xs[n_scan - 1]});
    for (auto [lo, hi] : brackets) {
      const double x = golden_max(w_of, lo, hi, 48);
      const double w = w_of(x);
      if (w > best_w) {
        best_w = w;
        best_x = x;
      }
    }
    boundary = (best_x <= xs[0] + 1e-9 * sp.x_s) || (best_x >= xs[n_scan - 1] - 1e-9 * sp.x_s);
    x_bar = best_x;
  }

  football_result out;
  out.x_bar = x_bar;
  out.boundary_maximizer = boundary;
  out.path = gamma(x_bar, cfg);
  const phase_path& path = out.path;
  const double w_half = path_volume(path, panels);
  out.half_volume = w_half;

  // Volume from the terminal tip backwards: V(x) = W - \int_x^{x0} dx'/y.
  const double k_sub =
      1.0 / std::sqrt(1.5 * cfg.r0 * std::cbrt(path.x0 * path.x0) - 12.0 * pi);
  auto tail_outer = [&](double xa) {  // \int_{xa}^{x0} dx / y, branch B only
    if (xa >= path.x0) return 0.0;
    if (path.x0 - xa < 1e-4 * path.x0)  // square-root closure at the tip
      return terminal_tail(path, path.x0 - xa);
    singular_integrand si;
    si.end = singular_end::right;
    si.subtraction_coefficient = k_sub;
    si.f = [&path](double x) {
      const double yy = path.y_squared(x);
      return yy <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(yy);
    };
    return integrate_right_singular(si, xa, path.x0, panels);
  };

  const double kappa = 4.5 * cfg.epsilon * cfg.ric0;
  const bool has_inner = path.x1 > 0.0;
  const double tail_junction = tail_outer(has_inner ? path.x1 : 0.0);
  auto volume_at = [&](double x) {  // V on the first half
    if (has_inner && x <= path.x1) {
      const double whole = sqrt_cap_integral(36.0 * pi - path.c2, kappa, path.x1);
      const double below = x > 0.0 ? sqrt_cap_integral(36.0 * pi - path.c2, kappa, x) : 0.0;
      return w_half - tail_junction - (whole - below);
    }
    return w_half - tail_outer(x);
  };

  // x-nodes: geometric toward the conical starting tip, uniform on the
  // inner branch, clustered toward the terminal tip where y -> 0.
  std::vector<double> xn;
  const int n_nodes = 220;
  const double x_split = has_inner ? path.x1 : 0.55 * path.x0;
  const double x_first = 5e-6 * path.x0;
  for (int i = 0; i < 50; ++i)
    xn.push_back(x_first * std::pow(x_split / (5.0 * x_first), i / 49.0));
  for (int i = 1; i <= n_nodes; ++i) xn.push_back(x_split * i / (n_nodes + 1.0));
  for (int i = 0; i <= n_nodes; ++i) {
    const double s = static_cast<double>(i) / n_nodes;
    xn.push_back(x_split + (path.x0 - x_split) * (1.0 - (1.0 - s) * (1.0 - s)));
  }
  std::sort(xn.begin(), xn.end());
  xn.erase(std::unique(xn.begin(), xn.end()), xn.end());

  std::vector<double> vn(xn.size()), yn(xn.size());
  for (std::size_t i = 0; i < xn.size(); ++i) {
    vn[i] = volume_at(xn[i]);
    yn[i] = path.y_of(xn[i]);
  }
  vn.back() = w_half;  // tip closed by the square-root asymptotics

  // Monotone Hermite inverse x(V) with exact slopes dx/dV = y; the
  // starting tip (V = 0, x = 0, dx/dV = y(0)) anchors the table.
  std::vector<double> hv{0.0}, hx{0.0}, hd{path.y_of(0.0)};
  for (std::size_t i = 0; i < xn.size(); ++i) {
    if (!(vn[i] > hv.back() + 1e-14 * w_half)) continue;
    hv.push_back(vn[i]);
    hx.push_back(xn[i]);
    hd.push_back(yn[i]);
  }
  auto x_of_v = std::make_shared<cubic_hermite>(hv, hx, hd);

  const double v_total = 2.0 * w_half;
  auto fold = [v_total, w_half](double v) {
    return v <= w_half ? v : v_total - v;  // mirror symmetry about W
  };
  auto path_copy = std::make_shared<phase_path>(path);

  iso_profile::analytic_fns fns;
  fns.area = [x_of_v, fold](double v) {
    const double x = x_of_v->value(fold(v));
    return std::cbrt(x * x);
  };
  fns.darea = [x_of_v, fold, path_copy, w_half](double v) {
    const double vf = fold(v);
    const double x = x_of_v->value(vf);
    const double slope = 2.0 / 3.0 * path_copy->y_of(x) / std::cbrt(x);
    return v <= w_half ? slope : -slope;
  };
  fns.d2area = [x_of_v, fold, path_copy](double v) {
    const double x = x_of_v->value(fold(v));
    const double yy = path_copy->y_squared(x);
    const double dyy = path_copy->y_squared_derivative(x);
    return 2.0 / 3.0 *
           (-yy / (3.0 * std::cbrt(x * x * x * x)) + 0.5 * dyy / std::cbrt(x));
  };

  // Sample nodes: one smoothly graded family in V, dense toward the two
  // singular tips but excluding them (A = 0 with a conical slope there);
  // the covered range reaches within O(1e-5 V) of the full volume.
  std::vector<double> vs;
  const int m_half = 440;
  vs.reserve(2 * m_half);
  for (int j = 1; j <= m_half; ++j)
    vs.push_back(w_half * std::pow(j / static_cast<double>(m_half), 2.5));
  for (int j = m_half; j-- > 1;) {
    const double v = v_total - w_half * std::pow(j / static_cast<double>(m_half), 2.5);
    if (v > vs.back() + 1e-13 * v_total) vs.push_back(v);
  }
  out.profile =
      iso_profile::from_analytic(std::move(vs), std::move(fns),
                                 end_descriptor::compact_end());
  return out;
}

}  // namespace isoperim
