#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace isoperim {

using real_fn = std::function<double(double)>;

/// Thrown when an integrand produces a non-finite value; carries the abscissa.
class evaluation_error : public std::runtime_error {
public:
  evaluation_error(const std::string& what, double abscissa)
      : std::runtime_error(what + " at x = " + std::to_string(abscissa)),
        abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

private:
  double abscissa_;
};

/// Thrown when a computation fails for numerical (not usage) reasons.
class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int default_panels = 1000;

/// Composite Simpson rule on [a, b] with n panels (n even, >= 2).
/// Exact for piecewise cubics; a == b returns 0; a > b is rejected.
double integrate_smooth(const real_fn& f, double a, double b,
                        int n = default_panels);

struct quadrature_check {
  double value;             // n-panel result
  double coarse_value;      // n/10-panel result
  double rel_disagreement;  // |value - coarse| / max(|value|, 1e-300)
  bool warned;              // rel_disagreement > 1e-6
};

/// integrate_smooth plus a built-in comparison against n/10 panels.
quadrature_check integrate_with_check(const real_fn& f, double a, double b,
                                      int n = default_panels);

/// The unique k for which g(x)^{-1/2} - k (1 - x/b)^{-1/2} is bounded
/// near b, namely k = (b |g'(b)|)^{-1/2}.  g must vanish at b with a
/// negative one-sided slope; the slope is estimated from a one-sided
/// stencil at offsets {1e-5, 2e-5, 4e-5} (b - a) with Richardson
/// extrapolation.
double singular_coefficient(const real_fn& g, double a, double b);

enum class singular_end { none, left, right };

/// Integrand with an inverse-square-root endpoint singularity.
/// f must be finite on the open interval; (b - x)^{1/2} f(x) (resp.
/// (x - a)^{1/2} f(x)) must have a finite limit at the singular end.
struct singular_integrand {
  real_fn f;
  singular_end end = singular_end::right;
  // NaN means: derive from f via singular_coefficient on g = 1/f^2.
  double subtraction_coefficient = std::numeric_limits<double>::quiet_NaN();
};

/// Integral of f over [a, b] where f blows up like (b - x)^{-1/2}:
/// Simpson on the bounded residual f - k (1 - x/b)^{-1/2} plus the
/// closed form 2 k b (1 - a/b)^{1/2} of the subtracted part.
/// Residual samples near b are checked against a cap; a mismatched k
/// raises numerical_error ("singularity mismatch").
double integrate_right_singular(const singular_integrand& si, double a,
                                double b, int n = default_panels);

/// Left-endpoint counterpart, implemented by reflection x -> a + b - x.
double integrate_left_singular(const singular_integrand& si, double a,
                               double b, int n = default_panels);

}  // namespace isoperim
