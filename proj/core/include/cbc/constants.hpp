// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace cbc {

/// The explicit constant chain behind the lower bound
/// D_p(B, B - C(v,theta)) >= f4^{1/p} * theta^{2 + (d-1)/p}.
/// f4 carries the derived (d-1) denominator; f4_published keeps the (d-2)
/// variant for side-by-side reporting (it is weaker for d >= 3).
struct DerivedConstants {
  double z_d = 0.0;  // integral of sin^{d-2} over [0, pi]
  double f1 = 0.0;   // 1 / z_d (angle density normalizer)
  double f2 = 0.0;   // f1 / 4^p
  double f3 = 0.0;   // f2 / 2^{d-2}
  double f4 = 0.0;   // f3 / (2^{2p+d-1} (d-1))
  double f4_published = 0.0;  // f3 / (2^{2p+d-1} (d-2))
  double no_extension_slope = 0.0;  // -(d-1)/p
  double divergence_exponent = 0.0; // 2 + (d-1)/p

  static DerivedConstants compute(int d, double p, int grid_points = 4096);
};

/// Smallest gamma with cap_area(theta, d) <= gamma sqrt(d) theta^{d-2} on
/// the given grid, i.e. the max of the ratio over the grid.
double fit_gamma(int d, const std::vector<double>& theta_grid, int grid_points = 4096);

}  // namespace cbc
