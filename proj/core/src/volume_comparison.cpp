#include "isoperim/volume_comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "isoperim/phase_plane.hpp"
#include "isoperim/quadrature.hpp"

namespace isoperim {

namespace {
constexpr double pi = std::numbers::pi;

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

double w_eps(double eps, double z, int panels) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::domain_error("w_eps: epsilon in (0, 1]");
  if (!(z >= 0.0 && z <= 4.0 * pi * (1.0 + 1e-12)))
    throw std::domain_error("w_eps: z outside [0, 4 pi]");
  z = std::min(z, 4.0 * pi);

  const double z_corner = 4.0 * pi / (3.0 - 2.0 * eps);
  if (z <= z_corner || eps == 1.0)
    return (0.25 / pi) / std::sqrt(eps) * z;

  const double y = std::sqrt(z) * (4.0 * pi - z) / (2.0 * (1.0 - eps));
  const double x0 = z * std::sqrt(z);  // z^{3/2}

  // Inner integral: exact (36pi - 27(1-eps) y^{2/3} - 9 eps x^{2/3})^{-1/2}.
  double inner = 0.0;
  if (y > 0.0) {
    const double d = 36.0 * pi - 27.0 * (1.0 - eps) * std::cbrt(y * y);
    inner = sqrt_cap_integral(d, 9.0 * eps, y);
  }

  // Outer integral, singular at x = z^{3/2}; the subtraction coefficient
  // comes from the closed-form slope of the radicand: k = (9z - 12pi)^{-1/2}.
  const double coef = 18.0 * (1.0 - eps) * y;
  if (x0 - y < 1e-4 * x0) {  // two-term square-root closure of a short branch
    const double len = x0 - y;
    const double x43 = std::cbrt(x0 * x0 * x0 * x0);
    const double gp = (9.0 * z - 12.0 * pi) / x0;  // positive on this branch
    const double gpp = -4.0 * coef / (9.0 * x43 * x0) + 2.0 / x43;
    const double beta = gpp / (2.0 * gp);
    const double outer_tail =
        (2.0 * std::sqrt(len) - beta / 3.0 * std::pow(len, 1.5)) / std::sqrt(gp);
    return (inner + outer_tail) / (pi * pi);
  }
  singular_integrand si;
  si.end = singular_end::right;
  si.subtraction_coefficient = 1.0 / std::sqrt(9.0 * z - 12.0 * pi);
  si.f = [coef](double x) {
    const double g =
        36.0 * pi - (coef == 0.0 ? 0.0 : coef / std::cbrt(x)) - 9.0 * std::cbrt(x * x);
    if (g < -1e-12 * 36.0 * pi)
      throw numerical_error("w_eps: invalid path (negative radicand)");
    return g <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(g);
  };
  const double outer = integrate_right_singular(si, y, x0, panels);

  return (inner + outer) / (pi * pi);
}

alpha_result alpha(double eps, int scan_points, int panels, int grid_export) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::domain_error("alpha: epsilon in (0, 1]");
  alpha_result out;
  out.epsilon = eps;

  const double z_lo = 4.0 * pi / (3.0 - 2.0 * eps);
  const double z_hi = 4.0 * pi;

  if (z_hi - z_lo <= 1e-12 * z_hi) {  // eps = 1: the interval degenerates
    out.alpha = 1.0;
    out.argmax_z = z_hi;
  } else {
    auto w = [&](double z) { return w_eps(eps, z, panels); };
    std::vector<double> zs(scan_points), wsv(scan_points);
    for (int i = 0; i < scan_points; ++i) {
      zs[i] = z_lo + (z_hi - z_lo) * i / (scan_points - 1.0);
      wsv[i] = w(zs[i]);
    }
    double best_z = wsv[0] >= wsv[scan_points - 1] ? zs[0] : zs[scan_points - 1];
    double best_w = std::max(wsv[0], wsv[scan_points - 1]);
    std::vector<std::pair<double, int>> locals;
    for (int i = 1; i + 1 < scan_points; ++i)
      if (wsv[i] >= wsv[i - 1] && wsv[i] >= wsv[i + 1]) locals.push_back({wsv[i], i});
    std::sort(locals.rbegin(), locals.rend());
    if (locals.size() > 2) locals.resize(2);
    std::vector<std::pair<double, double>> brackets;
    for (auto [w0, i] : locals) brackets.push_back({zs[i - 1], zs[i + 1]});
    brackets.push_back({zs[0], zs[1]});
    brackets.push_back({zs[scan_points - 2], zs[scan_points - 1]});
    for (auto [lo, hi] : brackets) {
      const double z = golden_max(w, lo, hi, 48);
      const double val = w(z);
      if (val > best_w) {
        best_w = val;
        best_z = z;
      }
    }
    out.alpha = std::max(best_w, 1.0);  // w(4pi) = 1 analytically
    out.argmax_z = best_w > 1.0 ? best_z : z_hi;
  }

  if (grid_export > 1) {
    out.z_grid.resize(grid_export);
    out.w_grid.resize(grid_export);
    for (int i = 0; i < grid_export; ++i) {
      out.z_grid[i] = z_hi * i / (grid_export - 1.0);
      out.w_grid[i] = w_eps(eps, out.z_grid[i], panels);
    }
  }
  return out;
}

epsilon0_result epsilon0(double tol, int panels) {
  if (!(tol >= 1e-8)) throw std::invalid_argument("epsilon0: tol >= 1e-8");
  const double margin = 1e-7;  // separates the alpha = 1 plateau from noise
  auto above_one = [&](double eps) { return alpha(eps, 512, panels).alpha > 1.0 + margin; };

  double lo = 1.0 - std::sqrt(3.0) / 2.0;
  double hi = 0.2;
  if (!above_one(lo))
    throw numerical_error("epsilon0: predicate false at the rigorous lower bound " +
                          std::to_string(lo));
  if (above_one(hi))
    throw numerical_error("epsilon0: predicate true at eps = 0.2; nonincreasing "
                          "alpha should have reached 1 before that");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (above_one(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi), lo, hi};
}

double volume_bound(double eps, const comparison_config& cfg) {
  return alpha(eps).alpha * cfg.v0;
}

}  // namespace isoperim
