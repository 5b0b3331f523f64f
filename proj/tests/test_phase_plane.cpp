#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isoperim/phase_plane.hpp"
#include "isoperim/quadrature.hpp"
#include "isoperim/volume_comparison.hpp"

using namespace isoperim;
namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("special points of the phase plane") {
  auto cfg = comparison_config::defaults(0.3);
  auto sp = special_points(cfg);
  CHECK(sp.x_s == doctest::Approx(std::pow(4.0 * pi, 1.5)).epsilon(1e-14));
  CHECK(sp.x_fb ==
        doctest::Approx(std::pow(4.0 * pi / (3.0 - 0.6), 1.5)).epsilon(1e-14));

  auto sp1 = special_points(comparison_config::defaults(1.0));
  CHECK(sp1.x_fb == doctest::Approx(sp1.x_s).epsilon(1e-14));

  auto sp0 = special_points(comparison_config::defaults(1e-9));
  CHECK(sp0.x_fb == doctest::Approx(std::pow(4.0 * pi / 3.0, 1.5)).epsilon(1e-6));

  comparison_config bad;
  bad.epsilon = 1.0;
  bad.r0 = 3.9;  // r0 <= 2 eps ric0
  CHECK_THROWS_AS(special_points(bad), std::domain_error);
}

TEST_CASE("terminal path at x_S has vanishing constants") {
  auto cfg = comparison_config::defaults(0.4);
  auto sp = special_points(cfg);
  auto p = gamma(sp.x_s, cfg);
  CHECK(p.kind == path_case::three);
  CHECK(p.c1 == 0.0);
  CHECK(p.x1 == 0.0);
  // m_R vanishes identically along it
  for (double x : {0.1 * sp.x_s, 0.5 * sp.x_s, 0.9 * sp.x_s}) {
    const double y = p.y_of(x);
    const double m_r = std::cbrt(x) * (36.0 * pi - y * y) - 1.5 * cfg.r0 * x;
    CHECK(std::abs(m_r) < 1e-9 * 36.0 * pi);
  }
}

TEST_CASE("the two case formulas coincide at x0 = x_FB") {
  auto cfg = comparison_config::defaults(0.2);
  auto sp = special_points(cfg);
  // substitute x0 = x_FB into the case-two constants: x1 returns x0
  const double c1 = std::cbrt(sp.x_fb) * (36.0 * pi - 1.5 * cfg.r0 * std::cbrt(sp.x_fb * sp.x_fb));
  const double x1 = c1 / (3.0 * (cfg.r0 - 3.0 * cfg.epsilon * cfg.ric0));
  CHECK(x1 == doctest::Approx(sp.x_fb).epsilon(1e-12));

  // and the case-two inner branch is the same curve as case one there
  // (the outer branch degenerates to the single terminal point)
  const double c2 = 1.5 * std::cbrt(3.0 * (cfg.r0 - 3.0 * cfg.epsilon * cfg.ric0) * c1 * c1);
  const double kappa = 4.5 * cfg.epsilon * cfg.ric0;
  CHECK(36.0 * pi - c2 ==
        doctest::Approx(kappa * std::cbrt(sp.x_fb * sp.x_fb)).epsilon(1e-12));
  auto path = gamma(sp.x_fb, cfg);
  CHECK(path.kind == path_case::one);
  for (double f : {0.2, 0.5, 0.8}) {
    const double x = f * sp.x_fb;
    const double case_one = path.y_of(x);
    const double case_two_inner =
        std::sqrt(36.0 * pi - c2 - kappa * std::cbrt(x * x));
    CHECK(case_one == doctest::Approx(case_two_inner).epsilon(1e-10));
  }
}

TEST_CASE("case-two paths join continuously at x1") {
  for (double eps : {0.1, 0.2, 0.4, 0.7}) {
    auto cfg = comparison_config::defaults(eps);
    auto sp = special_points(cfg);
    for (double f : {0.55, 0.75, 0.9}) {
      const double x0 = sp.x_fb + f * (sp.x_s - sp.x_fb);
      auto p = gamma(x0, cfg);
      REQUIRE(p.kind == path_case::two);
      const double inner = 36.0 * pi - p.c2 -
                           4.5 * cfg.epsilon * cfg.ric0 * std::cbrt(p.x1 * p.x1);
      const double outer = 36.0 * pi - p.c1 / std::cbrt(p.x1) -
                           1.5 * cfg.r0 * std::cbrt(p.x1 * p.x1);
      CHECK(std::abs(inner - outer) < 1e-10);
    }
  }
}

TEST_CASE("no path terminates beyond x_S; bad arguments rejected") {
  auto cfg = comparison_config::defaults(0.2);
  auto sp = special_points(cfg);
  CHECK_THROWS_AS(gamma(1.01 * sp.x_s, cfg), numerical_error);
  CHECK_THROWS_AS(gamma(0.0, cfg), std::domain_error);
  CHECK_THROWS_AS(gamma(-1.0, cfg), std::domain_error);
}

TEST_CASE("paths terminate on the axis like a square root") {
  auto cfg = comparison_config::defaults(0.25);
  auto sp = special_points(cfg);
  for (double x0 : {0.8 * sp.x_fb, 0.5 * (sp.x_fb + sp.x_s)}) {
    auto p = gamma(x0, cfg);
    CHECK(p.y_of(p.x0) == 0.0);
    const double slope = -p.y_squared_derivative(p.x0);
    CHECK(slope > 0.0);
    for (double d : {1e-4, 1e-5, 1e-6}) {
      const double y = p.y_of(p.x0 - d * p.x0);
      CHECK(y * y / (d * p.x0) == doctest::Approx(slope).epsilon(2e-3));
    }
  }
}

TEST_CASE("sampled paths are monotone: x up, y strictly down") {
  auto cfg = comparison_config::defaults(0.15);
  auto sp = special_points(cfg);
  auto p = gamma(0.7 * sp.x_s, cfg);
  for (std::size_t i = 1; i < p.xs.size(); ++i) {
    CHECK(p.xs[i] >= p.xs[i - 1]);
    CHECK(p.ys[i] < p.ys[i - 1]);
    CHECK(p.ys[i] >= 0.0);
  }
}

TEST_CASE("masses are constant along their branches") {
  auto cfg = comparison_config::defaults(0.3);
  auto sp = special_points(cfg);

  auto one = gamma(0.7 * sp.x_fb, cfg);
  for (double f : {0.1, 0.4, 0.9}) {
    const double x = f * one.x0;
    const double y = one.y_of(x);
    const double m_ric =
        36.0 * pi - y * y - 4.5 * cfg.epsilon * cfg.ric0 * std::cbrt(x * x);
    CHECK(m_ric == doctest::Approx(36.0 * pi -
                                   4.5 * cfg.epsilon * cfg.ric0 * std::cbrt(one.x0 * one.x0))
                       .epsilon(1e-8));
  }

  auto two = gamma(0.5 * (sp.x_fb + sp.x_s), cfg);
  for (double f : {0.05, 0.5, 0.95}) {
    const double x = two.x1 + f * (two.x0 - two.x1);
    const double y = two.y_of(x);
    const double m_r = std::cbrt(x) * (36.0 * pi - y * y) - 1.5 * cfg.r0 * x;
    CHECK(m_r == doctest::Approx(two.c1).epsilon(1e-8));
    const double x_in = f * two.x1;
    if (x_in > 0.0) {
      const double y_in = two.y_of(x_in);
      const double m_ric = 36.0 * pi - y_in * y_in -
                           4.5 * cfg.epsilon * cfg.ric0 * std::cbrt(x_in * x_in);
      CHECK(m_ric == doctest::Approx(two.c2).epsilon(1e-8));
    }
  }
}

TEST_CASE("path volume: sphere and football identities") {
  for (double eps : {0.05, 0.1, 0.2, 0.5, 0.9}) {
    auto cfg = comparison_config::defaults(eps);
    auto sp = special_points(cfg);
    CHECK(std::abs(path_volume(gamma(sp.x_s, cfg)) - pi * pi) < 1e-6);
    CHECK(std::abs(path_volume(gamma(sp.x_fb, cfg)) -
                   pi * pi / (std::sqrt(eps) * (3.0 - 2.0 * eps))) < 1e-6);
  }
}

TEST_CASE("path volume scales with the model sphere normalization") {
  // rescaling the model sphere to scalar curvature 24 (half the radius)
  // divides every volume by 8
  auto cfg = comparison_config::for_scale(0.3, 24.0);
  CHECK(cfg.ric0 == doctest::Approx(8.0));
  CHECK(cfg.v0 == doctest::Approx(2.0 * pi * pi / 8.0).epsilon(1e-14));
  auto sp = special_points(cfg);
  CHECK(std::abs(path_volume(gamma(sp.x_s, cfg)) - 0.5 * cfg.v0) < 1e-7);
  CHECK(std::abs(path_volume(gamma(sp.x_fb, cfg)) -
                 0.5 * cfg.v0 / (std::sqrt(0.3) * (3.0 - 0.6))) < 1e-7);
}

TEST_CASE("case-two volume against an independent graded trapezoid oracle") {
  // Brute-force \int dx / y with a tip-graded substitution x = x0 - u^2
  // (no singular subtraction machinery shared with the implementation).
  auto cfg = comparison_config::defaults(0.2);
  auto sp = special_points(cfg);
  auto path = gamma(0.55 * sp.x_fb + 0.45 * sp.x_s, cfg);
  REQUIRE(path.kind == path_case::two);

  auto piece = [&](double xa, double xb, long n) {
    // substituted integrand 2 span (1-u) / y(xb - span (1-u)^2) is smooth
    // up to and including the terminal root; midpoint rule in u
    const double span = xb - xa;
    double sum = 0.0;
    for (long i = 0; i < n; ++i) {
      const double u = (i + 0.5) / n;
      const double x = xb - span * (1.0 - u) * (1.0 - u);
      sum += 2.0 * span * (1.0 - u) / path.y_of(x);
    }
    return sum / n;
  };
  const double oracle = piece(0.0, path.x1, 200000) + piece(path.x1, path.x0, 200000);
  CHECK(path_volume(path) == doctest::Approx(oracle).epsilon(2e-7));
}

TEST_CASE("case-one closed form equals the direct singular quadrature") {
  auto cfg = comparison_config::defaults(0.35);
  auto sp = special_points(cfg);
  const double x0 = 0.6 * sp.x_fb;
  auto p = gamma(x0, cfg);
  const double closed = path_volume(p);

  const double kappa = 4.5 * cfg.epsilon * cfg.ric0;
  singular_integrand si;
  si.f = [&](double x) {
    const double yy = kappa * (std::cbrt(x0 * x0) - std::cbrt(x * x));
    return yy <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(yy);
  };
  const double quad = integrate_right_singular(si, 0.0, x0, 20000);
  CHECK(std::abs(closed - quad) < 1e-8);
}

TEST_CASE("W is continuous across the football point") {
  for (double eps : {0.1, 0.3}) {
    auto cfg = comparison_config::defaults(eps);
    auto sp = special_points(cfg);
    const double below = path_volume(gamma(sp.x_fb * (1.0 - 1e-9), cfg));
    const double above = path_volume(gamma(sp.x_fb * (1.0 + 1e-9), cfg));
    CHECK(std::abs(below - above) < 1e-6);
    const double b2 = path_volume(gamma(sp.x_fb * (1.0 - 1e-3), cfg));
    const double a2 = path_volume(gamma(sp.x_fb * (1.0 + 1e-3), cfg));
    CHECK(std::abs(b2 - a2) < 0.05 * std::abs(b2));
  }
}

TEST_CASE("dimension-n sphere volumes through the phase-plane integral") {
  CHECK(std::abs(2.0 * bishop_halfvolume(3, 2.0) - 2.0 * pi * pi) < 1e-6);
  CHECK(std::abs(2.0 * bishop_halfvolume(2, 1.0) - 4.0 * pi) < 1e-6);

  for (int n = 2; n <= 5; ++n) {
    const double ric0 = 1.3;
    const double rho = std::sqrt((n - 1.0) / ric0);
    const double vol_exact = unit_sphere_area(n + 1) * std::pow(rho, n);
    CHECK(std::abs(2.0 * bishop_halfvolume(n, ric0) - vol_exact) < 1e-6 * vol_exact);
  }

  // homogeneity: quadrupling ric0 divides the volume by 2^n
  for (int n : {2, 3, 4}) {
    const double v1 = bishop_halfvolume(n, 2.0);
    const double v4 = bishop_halfvolume(n, 8.0);
    CHECK(v1 / v4 == doctest::Approx(std::pow(2.0, n)).epsilon(1e-10));
  }

  CHECK_THROWS_AS(bishop_halfvolume(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bishop_halfvolume(3, -1.0), std::invalid_argument);
}

TEST_CASE("unit sphere areas from exact half-integer Gamma values") {
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * pi).epsilon(1e-15));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * pi).epsilon(1e-15));
  CHECK(unit_sphere_area(4) == doctest::Approx(2.0 * pi * pi).epsilon(1e-15));
  CHECK(unit_sphere_area(5) == doctest::Approx(8.0 * pi * pi / 3.0).epsilon(1e-15));
}

TEST_CASE("football profile: degenerate and sharp cases") {
  // eps = 1: the scan interval collapses and the round sphere appears
  auto fb1 = football_profile(comparison_config::defaults(1.0));
  CHECK(2.0 * fb1.half_volume == doctest::Approx(2.0 * pi * pi).epsilon(1e-6));
  for (double v : {2.0, 8.0, 15.0})
    CHECK(scalar_curvature(fb1.profile, v) == doctest::Approx(6.0).epsilon(1e-6));

  // eps = 0.2: alpha = 1, the maximizer sits at the boundary x_S
  auto fb2 = football_profile(comparison_config::defaults(0.2));
  CHECK(fb2.boundary_maximizer);
  CHECK(2.0 * fb2.half_volume ==
        doctest::Approx(alpha(0.2).alpha * 2.0 * pi * pi).epsilon(1e-4));

  // eps = 0.05: sharp volume alpha(eps) V0 > V0
  auto fb3 = football_profile(comparison_config::defaults(0.05));
  CHECK_FALSE(fb3.boundary_maximizer);
  const double vol = 2.0 * fb3.half_volume;
  CHECK(std::abs(vol - alpha(0.05).alpha * 2.0 * pi * pi) < 1e-4);
  CHECK(vol > 2.0 * pi * pi);
}

TEST_CASE("football samples agree with an independent path-volume oracle") {
  auto cfg = comparison_config::defaults(0.1);
  auto fb = football_profile(cfg);
  const auto& path = fb.path;

  auto volume_below = [&](double x_hi) {
    // independent graded midpoint rule on \int_0^{x_hi} dx / y
    auto piece = [&](double xa, double xb, long n) {
      const double span = xb - xa;
      double sum = 0.0;
      for (long i = 0; i < n; ++i) {
        const double u = (i + 0.5) / n;
        const double x = xb - span * (1.0 - u) * (1.0 - u);
        sum += 2.0 * span * (1.0 - u) / path.y_of(x);
      }
      return sum / n;
    };
    if (x_hi <= path.x1) return piece(0.0, x_hi, 200000);
    return piece(0.0, path.x1, 200000) + piece(path.x1, x_hi, 200000);
  };

  // spot-check sampled (V, A) pairs on the first half against the oracle
  const auto& vs = fb.profile.volumes();
  for (std::size_t i = vs.size() / 10; i < vs.size() / 2; i += vs.size() / 7) {
    const double x = std::pow(fb.profile.area(vs[i]), 1.5);
    CHECK(volume_below(x) == doctest::Approx(vs[i]).epsilon(1e-6));
  }
  CHECK(volume_below(path.x0) == doctest::Approx(fb.half_volume).epsilon(1e-7));
}

TEST_CASE("football equality curvatures away from the tips") {
  auto cfg = comparison_config::defaults(0.1);
  auto fb = football_profile(cfg);
  const auto& p = fb.profile;
  const double v_tot = 2.0 * fb.half_volume;
  int on_scalar = 0, on_ricci = 0;
  for (double v : p.volumes()) {
    if (v < 0.01 * v_tot || v > 0.99 * v_tot) continue;  // tip exclusion
    const double x = std::pow(p.area(v), 1.5);
    const double vf = v <= fb.half_volume ? v : v_tot - v;
    (void)vf;
    if (x > fb.path.x1 * 1.001) {
      CHECK(scalar_curvature(p, v) == doctest::Approx(cfg.r0).epsilon(1e-4));
      ++on_scalar;
    } else if (x < fb.path.x1 * 0.999) {
      CHECK(ricci_normal(p, v) ==
            doctest::Approx(cfg.epsilon * cfg.ric0).epsilon(1e-4));
      ++on_ricci;
    }
  }
  CHECK(on_scalar > 20);
  CHECK(on_ricci > 20);
}
