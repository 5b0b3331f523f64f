#pragma once

#include <cstddef>
#include <vector>

namespace isoperim {

/// Piecewise cubic Hermite on strictly increasing nodes, with supplied
/// slopes.  value/derivative/second_derivative are C^1 / C^0 / piecewise.
class cubic_hermite {
public:
  cubic_hermite() = default;
  cubic_hermite(std::vector<double> x, std::vector<double> y,
                std::vector<double> dydx);

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& values() const { return y_; }
  const std::vector<double>& slopes() const { return d_; }
  bool empty() const { return x_.empty(); }

private:
  std::size_t interval(double x) const;
  std::vector<double> x_, y_, d_;
};

/// Fritsch-Carlson monotonicity-preserving slopes for the given data
/// (the PCHIP choice); flat at local extrema of y.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y);

}  // namespace isoperim
