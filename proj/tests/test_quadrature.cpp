#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isoperim/quadrature.hpp"

using namespace isoperim;
namespace {
constexpr double pi = std::numbers::pi;

// Independent plain Simpson used as the self-refinement oracle.
double simpson_ref(const std::function<double(double)>& f, double a, double b, long n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (long i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}
}  // namespace

TEST_CASE("Simpson is exact on cubics and handles the empty interval") {
  CHECK(integrate_smooth([](double x) { return x * x; }, 0.0, 1.0, 2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(integrate_smooth([](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0, 2) ==
        doctest::Approx(15.0 / 4.0 - 3.0).epsilon(1e-14));
  CHECK(integrate_smooth([](double x) { return std::exp(x); }, 1.0, 1.0) == 0.0);
}

TEST_CASE("Simpson integrates sin to 1e-10 at n = 1000") {
  const double got = integrate_smooth([](double x) { return std::sin(x); }, 0.0, pi, 1000);
  CHECK(std::abs(got - 2.0) < 1e-10);
}

TEST_CASE("second-branch residual integrand matches the n=1e6 reference") {
  // eps = 0.2, z = 6: the subtracted outer integrand of the volume
  // functional, frozen from the n = 1e6 oracle.
  const double eps = 0.2, z = 6.0;
  const double y = std::sqrt(z) * (4.0 * pi - z) / (2.0 * (1.0 - eps));
  const double b = z * std::sqrt(z);
  const double k = 1.0 / std::sqrt(9.0 * z - 12.0 * pi);
  const double coef = 18.0 * (1.0 - eps) * y;
  auto residual = [=](double x) {
    if (x >= b) return 0.0;
    const double g = 36.0 * pi - coef / std::cbrt(x) - 9.0 * std::cbrt(x * x);
    return 1.0 / std::sqrt(g) - k / std::sqrt((b - x) / b);
  };
  const double frozen = 0.12984730905668;
  CHECK(std::abs(simpson_ref(residual, y, b, 1000000) - frozen) < 1e-10);
  CHECK(std::abs(integrate_smooth(residual, y, b, 40000) - frozen) < 1e-8);
}

TEST_CASE("argument errors: odd panel count, reversed interval, bad values") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_smooth(f, 0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(integrate_smooth(f, 0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(integrate_smooth(f, 1.0, 0.0, 2), std::invalid_argument);

  try {
    integrate_smooth([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 2);
    FAIL("expected evaluation_error");
  } catch (const evaluation_error& e) {
    CHECK(e.abscissa() == doctest::Approx(0.5));
  }
}

TEST_CASE("linearity holds to machine precision on a fixed grid") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto f = [](double x) { return std::sin(3.0 * x) + x * x; };
  auto g = [](double x) { return std::exp(-x) * std::cos(x); };
  for (int trial = 0; trial < 20; ++trial) {
    const double al = u(rng), be = u(rng);
    auto combo = [&](double x) { return al * f(x) + be * g(x); };
    const double lhs = integrate_smooth(combo, -1.0, 2.0, 64);
    const double rhs = al * integrate_smooth(f, -1.0, 2.0, 64) +
                       be * integrate_smooth(g, -1.0, 2.0, 64);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("grid stability: n = 1000 vs n = 100 agree to six digits") {
  // The full singular integrals of the volume functional for a grid of
  // (eps, z), plus the dimension-n sphere integrand family.
  for (double eps : {0.1, 0.2, 0.5}) {
    for (double zf : {0.5, 0.8, 0.95}) {
      const double zc = 4.0 * pi / (3.0 - 2.0 * eps);
      const double z = zc + (4.0 * pi - zc) * zf;
      const double y = std::sqrt(z) * (4.0 * pi - z) / (2.0 * (1.0 - eps));
      const double b = z * std::sqrt(z);
      const double coef = 18.0 * (1.0 - eps) * y;
      singular_integrand si;
      si.subtraction_coefficient = 1.0 / std::sqrt(9.0 * z - 12.0 * pi);
      si.f = [=](double x) {
        const double g = 36.0 * pi - coef / std::cbrt(x) - 9.0 * std::cbrt(x * x);
        return g <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(g);
      };
      const double fine = integrate_right_singular(si, y, b, 1000);
      const double coarse = integrate_right_singular(si, y, b, 100);
      CHECK(std::abs(fine - coarse) < 5e-6 * std::abs(fine));
    }
  }
  singular_integrand sphere;
  sphere.f = [](double zz) {
    const double g = 1.0 - std::cbrt(zz * zz);
    return g <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(g);
  };
  sphere.subtraction_coefficient = std::sqrt(1.5);
  const double fine = integrate_right_singular(sphere, 0.0, 1.0, 1000);
  const double coarse = integrate_right_singular(sphere, 0.0, 1.0, 100);
  CHECK(std::abs(fine - coarse) < 5e-6 * std::abs(fine));
}

TEST_CASE("integrate_with_check warns only when the coarse grid disagrees") {
  auto smooth = [](double x) { return std::exp(-x * x); };
  CHECK_FALSE(integrate_with_check(smooth, 0.0, 2.0, 1000).warned);
  auto nasty = [](double x) { return std::sin(200.0 * x * x); };
  CHECK(integrate_with_check(nasty, 0.0, 3.0, 60).warned);
}

TEST_CASE("singular_coefficient recovers k = (b |g'(b)|)^{-1/2}") {
  CHECK(singular_coefficient([](double x) { return 1.0 - x; }, 0.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-9));

  // g(z) = 1 - z^{2/3}: g'(1) = -2/3, so k = sqrt(3/2); the difference
  // f - k (1-x)^{-1/2} must stay bounded near 1.
  auto g = [](double z) { return 1.0 - std::cbrt(z * z); };
  const double k = singular_coefficient(g, 0.0, 1.0);
  CHECK(k == doctest::Approx(std::sqrt(1.5)).epsilon(1e-9));
  double prev = 0.0;
  for (double u : {1e-4, 1e-6, 1e-8}) {
    const double x = 1.0 - u;
    const double diff = 1.0 / std::sqrt(g(x)) - k / std::sqrt(1.0 - x);
    CHECK(std::abs(diff) < 0.3);
    if (prev != 0.0) CHECK(std::abs(diff) < std::abs(prev) + 1e-12);
    prev = diff;
  }

  // Chapter-3 outer integrand at eps = 0.2, z = 6 against the closed-form
  // slope: k = (9z - 12 pi)^{-1/2}.
  const double eps = 0.2, z = 6.0;
  const double y = std::sqrt(z) * (4.0 * pi - z) / (2.0 * (1.0 - eps));
  const double b = z * std::sqrt(z);
  const double coef = 18.0 * (1.0 - eps) * y;
  auto g2 = [=](double x) {
    return 36.0 * pi - coef / std::cbrt(x) - 9.0 * std::cbrt(x * x);
  };
  CHECK(singular_coefficient(g2, y, b) ==
        doctest::Approx(1.0 / std::sqrt(9.0 * z - 12.0 * pi)).epsilon(1e-8));
}

TEST_CASE("singular_coefficient rejects non-roots and wrong-signed slopes") {
  CHECK_THROWS_AS(singular_coefficient([](double x) { return 2.0 - x; }, 0.0, 1.0),
                  numerical_error);
  CHECK_THROWS_AS(singular_coefficient([](double x) { return x - 1.0; }, 0.0, 1.0),
                  numerical_error);
}

TEST_CASE("right-singular integral: pure subtraction term is exact") {
  singular_integrand si;
  si.f = [](double x) { return 1.0 / std::sqrt(1.0 - x); };
  si.subtraction_coefficient = 1.0;
  CHECK(integrate_right_singular(si, 0.0, 1.0, 100) ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("right-singular integral: dimension-3 sphere integrand gives 3 pi / 4") {
  singular_integrand si;
  si.f = [](double z) {
    const double g = 1.0 - std::cbrt(z * z);
    return g <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(g);
  };
  // k derived internally from g = 1/f^2
  CHECK(std::abs(integrate_right_singular(si, 0.0, 1.0, 40000) - 3.0 * pi / 4.0) < 1e-8);
}

TEST_CASE("right-singular integral: mixed integrand, k supplied") {
  singular_integrand si;
  si.f = [](double x) { return 1.0 / std::sqrt(1.0 - x) + x; };
  si.subtraction_coefficient = 1.0;
  CHECK(std::abs(integrate_right_singular(si, 0.0, 1.0, 1000) - 2.5) < 1e-10);
}

TEST_CASE("a wrong subtraction coefficient is detected") {
  singular_integrand si;
  si.f = [](double x) { return 1.0 / std::sqrt(1.0 - x); };
  si.subtraction_coefficient = 2.0;
  CHECK_THROWS_AS(integrate_right_singular(si, 0.0, 1.0, 1000), numerical_error);
}

TEST_CASE("left-singular integral by reflection") {
  singular_integrand si;
  si.end = singular_end::left;
  si.f = [](double x) { return 1.0 / std::sqrt(x - 1.0); };  // singular at a = 1
  const double got = integrate_left_singular(si, 1.0, 2.0, 2000);
  CHECK(got == doctest::Approx(2.0).epsilon(1e-10));

  singular_integrand wrong_end;
  wrong_end.end = singular_end::left;
  wrong_end.f = si.f;
  CHECK_THROWS_AS(integrate_right_singular(wrong_end, 1.0, 2.0, 100),
                  std::invalid_argument);
}
