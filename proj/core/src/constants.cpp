// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cbc/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "cbc/sphere.hpp"

namespace cbc {

DerivedConstants DerivedConstants::compute(int d, double p, int grid_points) {
  if (d < 3) throw std::invalid_argument("DerivedConstants: d >= 3 required");
  if (!(p >= 1.0)) throw std::invalid_argument("DerivedConstants: p >= 1 required");
  DerivedConstants c;
  c.z_d = sin_power_integral(3.141592653589793, d, grid_points);
  c.f1 = 1.0 / c.z_d;
  c.f2 = c.f1 / std::pow(4.0, p);
  c.f3 = c.f2 / std::pow(2.0, d - 2);
  const double scale = std::pow(2.0, 2.0 * p + d - 1);
  c.f4 = c.f3 / (scale * (d - 1));
  c.f4_published = (d > 2) ? c.f3 / (scale * (d - 2)) : 0.0;
  c.no_extension_slope = -(d - 1) / p;
  c.divergence_exponent = 2.0 + (d - 1) / p;
  return c;
}

double fit_gamma(int d, const std::vector<double>& theta_grid, int grid_points) {
  if (theta_grid.empty()) throw std::invalid_argument("fit_gamma: empty grid");
  double gamma = 0.0;
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  for (double theta : theta_grid) {
    if (!(theta > 0.0 && theta < 1.5707963267948966)) {
      throw std::invalid_argument("fit_gamma: grid must lie in (0, pi/2)");
    }
    gamma = std::max(gamma, cap_area(theta, d, grid_points) /
                                (sqrt_d * std::pow(theta, d - 2)));
  }
  return gamma;
}

}  // namespace cbc
