// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "cbc/hard_instance.hpp"

namespace cbc {

struct SteinerEstimate {
  Point point;
  double std_error = 0.0;  // pooled over coordinates
  int samples = 0;
};

struct SelectorOutput {
  Point point;
  std::optional<int> active_bump;
  bool containment_checked = false;
  double steiner_std_error = 0.0;  // 0 on the exact (instance-body) path
};

struct SelectorContainmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Monte Carlo Steiner point: mean of d * y * h_K(y) over uniform y, with
/// per-coordinate standard errors pooled into one scalar.
SteinerEstimate steiner(const ConvexBody& K, const QuadratureSpec& quad);

/// s̄(K_i) = ±eta * alpha_i * e_1 (+ for odd i, - for even i).
Point partial_selector(const HardInstance& instance, int i);

/// If K is the instance body K_i (the unit ball, or a CapCutBall whose cuts
/// match the instance prefix exactly), returns i; otherwise nullopt.
std::optional<int> instance_prefix_index(const HardInstance& instance, const ConvexBody& K);

/// Bump weight f_i(K) = max{1 - D_p(K, K_i)/r_i, 0} with r_i = alpha_i/2.
/// The distance is exact for instance bodies, Monte Carlo otherwise.
double bump(const HardInstance& instance, int i, const ConvexBody& K,
            const QuadratureSpec& quad);

/// The unique i with D_p(K, K_i) < r_i, or nullopt. Candidates are pruned
/// with the triangle inequality against D_p(K, K_1) before evaluation.
std::optional<int> locate_bump(const HardInstance& instance, const ConvexBody& K,
                               const QuadratureSpec& quad);

/// s(K) = st(K) + f_i(K) (s̄(K_i) - st(K)) for the located bump, st(K) if
/// none. Exact on the instance bodies. Verifies s(K) ∈ K whenever K admits
/// exact membership and throws SelectorContainmentError on failure.
SelectorOutput full_selector(const HardInstance& instance, const ConvexBody& K,
                             const QuadratureSpec& quad);

/// Steiner estimates of all of K_1..K_n at once, sharing one direction
/// sample across bodies (common random numbers). Equivalent to calling
/// steiner() per body with the same sample, but a single O(samples * n)
/// scan instead of O(samples * n^2) support evaluations.
std::vector<Point> steiner_trajectory(const HardInstance& instance, int n,
                                      const QuadratureSpec& quad);

}  // namespace cbc
