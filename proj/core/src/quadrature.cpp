#include "isoperim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace isoperim {

namespace {

double eval_checked(const real_fn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw evaluation_error("non-finite integrand value", x);
  return y;
}

void validate_interval(double a, double b, int n) {
  if (!(a <= b)) throw std::invalid_argument("reversed interval: a > b");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("Simpson panel count must be even and >= 2");
}

// Simpson sum with exact endpoint abscissae.
double simpson(const real_fn& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n; i += 2) odd += eval_checked(f, a + i * h);
  for (int i = 2; i < n; i += 2) even += eval_checked(f, a + i * h);
  return h / 3.0 * (eval_checked(f, a) + eval_checked(f, b) + 4.0 * odd + 2.0 * even);
}

}  // namespace

double integrate_smooth(const real_fn& f, double a, double b, int n) {
  validate_interval(a, b, n);
  if (a == b) return 0.0;
  return simpson(f, a, b, n);
}

quadrature_check integrate_with_check(const real_fn& f, double a, double b, int n) {
  validate_interval(a, b, n);
  quadrature_check out{0.0, 0.0, 0.0, false};
  if (a == b) return out;
  int coarse = n / 10;
  if (coarse < 2) coarse = 2;
  if (coarse % 2 != 0) ++coarse;
  out.value = simpson(f, a, b, n);
  out.coarse_value = simpson(f, a, b, coarse);
  out.rel_disagreement =
      std::abs(out.value - out.coarse_value) / std::max(std::abs(out.value), 1e-300);
  out.warned = out.rel_disagreement > 1e-6;
  return out;
}

double singular_coefficient(const real_fn& g, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("singular_coefficient: need a < b");
  if (!(b > 0.0))
    throw std::invalid_argument("singular_coefficient: subtraction form needs b > 0");

  const double gb = g(b);
  const double scale = (b - a);
  const double h1 = 1e-5 * scale;
  const double g1 = g(b - h1);
  const double g2 = g(b - 2.0 * h1);
  const double g4 = g(b - 4.0 * h1);
  const double mag = std::max({std::abs(g1), std::abs(g2), std::abs(g4), 1e-30});
  if (!(std::abs(gb) <= 1e-7 * mag + 1e-300))
    throw numerical_error("singular_coefficient: endpoint not a root of g");

  // One-sided difference is first-order accurate; two Richardson steps.
  const double d1 = (gb - g1) / h1;
  const double d2 = (gb - g2) / (2.0 * h1);
  const double d4 = (gb - g4) / (4.0 * h1);
  const double r1 = 2.0 * d1 - d2;
  const double r2 = 2.0 * d2 - d4;
  const double slope = (4.0 * r1 - r2) / 3.0;

  if (!(slope < 0.0))
    throw numerical_error("singular_coefficient: wrong-signed slope at endpoint");
  return 1.0 / std::sqrt(b * (-slope));
}

namespace {

double right_singular_impl(const real_fn& f, double k, double a, double b, int n) {
  auto raw = [&](double x) -> double { return f(x) - k / std::sqrt((b - x) / b); };
  // The residual is bounded but its endpoint limit need not vanish (f may
  // carry a smooth part); extrapolate through r(b-u) = r(b) + C sqrt(u)
  // + D u with samples at u, 4u, 16u.
  const double du = 1e-6 * (b - a);
  const double r1 = raw(b - du), r4 = raw(b - 4.0 * du), r16 = raw(b - 16.0 * du);
  const double r_end = (4.0 * (2.0 * r1 - r4) - (2.0 * r4 - r16)) / 3.0;
  auto residual = [&](double x) -> double { return x >= b ? r_end : raw(x); };

  const double quad = integrate_smooth(residual, a, b, n);
  const double closed = 2.0 * k * std::sqrt(b * (b - a));

  // Cap check: samples within (b-a)*1e-4 of b must stay below
  // 1e3 * median(|residual|) (with an absolute floor for the exact case).
  std::vector<double> mags;
  mags.reserve(64);
  for (int i = 0; i < 64; ++i) {
    const double x = a + (b - a) * (i + 0.5) / 64.0;
    mags.push_back(std::abs(residual(x)));
  }
  std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
  const double median = mags[mags.size() / 2];
  const double cap = std::max(1e3 * median, 1e-9 * (1.0 + std::abs(k)));
  double prev_mag = 0.0;
  for (double frac : {1e-4, 5e-5, 2.5e-5, 1e-5}) {
    const double x = b - (b - a) * frac;
    const double r = std::abs(residual(x));
    const double noise = std::max(1e-9 * (1.0 + std::abs(k)), 1e-4 * std::abs(f(x)));
    // Values far below f are cancellation noise, not an unbounded
    // residual.  A correct k makes the residual shrink toward b; growth
    // across the probe ladder means the subtracted singularity is wrong.
    if (r > cap && r > noise)
      throw numerical_error("singularity mismatch: residual unbounded near endpoint");
    // Probe spacing halves u, so a correct subtraction decays by ~0.71
    // per step while a leftover (1 - x/b)^{-1/2} grows by ~1.41.
    if (prev_mag > 0.0 && r > 1.25 * prev_mag && r > noise)
      throw numerical_error("singularity mismatch: residual grows toward endpoint");
    prev_mag = r;
  }
  return quad + closed;
}

}  // namespace

double integrate_right_singular(const singular_integrand& si, double a, double b, int n) {
  validate_interval(a, b, n);
  if (si.end != singular_end::right)
    throw std::invalid_argument("integrate_right_singular: integrand not right-singular");
  if (a == b) return 0.0;
  if (!(b > 0.0))
    throw std::invalid_argument("integrate_right_singular: subtraction form needs b > 0");

  double k = si.subtraction_coefficient;
  if (std::isnan(k)) {
    auto g = [&](double x) -> double {
      const double fx = si.f(x);
      if (!std::isfinite(fx)) return 0.0;  // limit at the singular endpoint
      return 1.0 / (fx * fx);
    };
    k = singular_coefficient(g, a, b);
  }
  return right_singular_impl(si.f, k, a, b, n);
}

double integrate_left_singular(const singular_integrand& si, double a, double b, int n) {
  validate_interval(a, b, n);
  if (si.end != singular_end::left)
    throw std::invalid_argument("integrate_left_singular: integrand not left-singular");
  if (a == b) return 0.0;

  singular_integrand reflected;
  reflected.end = singular_end::right;
  reflected.subtraction_coefficient = si.subtraction_coefficient;
  const real_fn f = si.f;
  reflected.f = [f, a, b](double x) { return f(a + b - x); };
  if (!(b > 0.0))
    throw std::invalid_argument("integrate_left_singular: subtraction form needs b > 0");
  return integrate_right_singular(reflected, a, b, n);
}

}  // namespace isoperim
