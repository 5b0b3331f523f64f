#include "isoperim/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isoperim {

cubic_hermite::cubic_hermite(std::vector<double> x, std::vector<double> y,
                             std::vector<double> dydx)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(dydx)) {
  if (x_.size() < 2 || x_.size() != y_.size() || x_.size() != d_.size())
    throw std::invalid_argument("cubic_hermite: need >= 2 nodes with matching sizes");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("cubic_hermite: nodes must be strictly increasing");
}

std::size_t cubic_hermite::interval(double x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  if (i >= x_.size() - 1) i = x_.size() - 2;
  return i;
}

double cubic_hermite::value(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
}

double cubic_hermite::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6 * t2 - 6 * t) / h;
  const double dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = (-6 * t2 + 6 * t) / h;
  const double dh11 = 3 * t2 - 2 * t;
  return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

double cubic_hermite::second_derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double d2h00 = (12 * t - 6) / (h * h);
  const double d2h10 = (6 * t - 4) / h;
  const double d2h01 = (-12 * t + 6) / (h * h);
  const double d2h11 = (6 * t - 2) / h;
  return d2h00 * y_[i] + d2h10 * d_[i] + d2h01 * y_[i + 1] + d2h11 * d_[i + 1];
}

std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n)
    throw std::invalid_argument("pchip_slopes: need >= 2 matching samples");
  std::vector<double> h(n - 1), s(n - 1), d(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    s[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = s[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (s[i - 1] * s[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2 * h[i] + h[i - 1];
      const double w2 = h[i] + 2 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
    }
  }
  // One-sided ends with the standard shape-preserving clamp.
  auto end_slope = [](double h0, double h1, double s0, double s1) {
    double d0 = ((2 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if (d0 * s0 <= 0.0)
      d0 = 0.0;
    else if (s0 * s1 < 0.0 && std::abs(d0) > 3.0 * std::abs(s0))
      d0 = 3.0 * s0;
    return d0;
  };
  d[0] = end_slope(h[0], h[1], s[0], s[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
  return d;
}

}  // namespace isoperim
