// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "cbc/selectors.hpp"

namespace cbc {

struct Trajectory {
  std::vector<Point> points;       // x_0 = origin first
  std::vector<double> step_costs;  // ||x_t - x_{t-1}||
  double total = 0.0;
};

struct RunReport {
  Trajectory trajectory;
  double opt_cost = 0.0;
  std::vector<double> prefix_movements;  // M_1, M_2, ... (nondecreasing)

  ordered_json to_json() const;
};

using Selector = std::function<Point(const ConvexBody&)>;

/// Runs a selector over a nested request sequence. Nestedness is verified by
/// pointwise support dominance on sampled directions (1e-9 slack) before any
/// step is taken; all sets must live in the unit ball.
RunReport run_nested(const std::vector<const ConvexBody*>& sequence, const Selector& select,
                     const QuadratureSpec& quad, int check_directions = 256);

/// Offline optimum for a nested sequence: one move from x0 into the final
/// set. Exact for balls; Dykstra alternating projections (ball + slabs,
/// 1e-9 convergence) for CapCutBall. PointHull is unsupported.
double opt_nested(const Point& x0, const ConvexBody& last);

/// The alternating (non-nested) request sequence K, K', K, K', ... against a
/// memoryless selector; opt_cost is the distance from the origin to the
/// caller-supplied witness point of K ∩ K'.
RunReport alternating_demo(const ConvexBody& K, const ConvexBody& K_prime, int steps,
                           const Selector& select, const Point& witness);

enum class ProbeSelector { kPartial, kSteiner, kConstantOrigin };

struct ProbePoint {
  int n = 0;
  double movement = 0.0;
};

/// Movement partial sums M_N on the hard instance at N in {10, 100, ..., n}.
/// The partial selector path is closed-form and exact; the Steiner path uses
/// steiner_trajectory (one shared sample across all bodies).
std::vector<ProbePoint> competitiveness_probe(ProbeSelector kind, const HardInstance& instance,
                                              int n, const QuadratureSpec& quad);

}  // namespace cbc
