// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "cbc/bodies.hpp"

namespace cbc {

struct InstanceParams {
  double p = 2.0;
  int d = 8;
  double eps = 0.1;
  double alpha = 0.0;  // schedule scale; 0 means "calibrate"
  int n_caps = 10000;
  std::uint64_t seed = 42;

  /// Enforces p > 1, d > (4p-1)/(p-1) strictly, eps in (0,1), n_caps >= 1,
  /// and (when alpha is set) 0 < alpha <= arccos(1-eps).
  void validate(bool require_alpha = true) const;
};

/// Schedule exponent q = 2 + (d-1)/p.
double schedule_exponent(int d, double p);

/// theta_i = alpha * i^{-1/q}, strictly decreasing in i.
double theta_schedule(int i, double alpha, int d, double p);

struct Calibration {
  double alpha = 0.0;
  double packing_sum = 0.0;  // certified upper bound on sum_i sigma(C(2 theta_i))
  int prefix_terms = 0;
};

/// Certified upper bound on the infinite packing sum sum_i sigma(C(2 theta_i)):
/// the first `prefix_terms` cap areas summed by quadrature, plus an analytic
/// tail bound from the monotone majorant sigma(C(phi)) <= phi^{d-1}/((d-1) Z_d)
/// and integral comparison over i.
double packing_sum_bound(double alpha, int d, double p, int prefix_terms = 2000,
                         int grid_points = 4096);

/// Largest alpha on a geometric grid below arccos(1-eps) whose certified
/// packing sum is < 1/2. Throws if no grid point is feasible.
Calibration calibrate_alpha(int d, double p, double eps, int grid_points = 4096);

/// Greedy rejection packing: u_{i+1} uniform, resampled until outside every
/// C_±(u_j, 2 theta_j) for j <= i. Budget of 1e6 draws per index.
std::vector<UnitVector> pack_caps(const InstanceParams& params,
                                  const std::vector<double>& thetas);

/// The calibrated nested sequence K_1 ⊇ K_2 ⊇ ... : per-cap directions and
/// angles, the exact per-step distances alpha_i, and eta = eps/4.
class HardInstance {
 public:
  HardInstance(InstanceParams params, std::vector<UnitVector> centers,
               std::vector<double> thetas, std::vector<double> alphas, double eta);

  const InstanceParams& params() const { return params_; }
  int n() const { return static_cast<int>(thetas_.size()); }
  const std::vector<UnitVector>& centers() const { return centers_; }
  const std::vector<double>& thetas() const { return thetas_; }
  const std::vector<double>& alphas() const { return alphas_; }
  double eta() const { return eta_; }

  double theta(int i) const { return thetas_.at(static_cast<std::size_t>(i - 1)); }
  double alpha(int i) const { return alphas_.at(static_cast<std::size_t>(i - 1)); }

  /// K_i for i in [1, n+1]: the unit ball with cuts {(u_j, theta_j)}_{j<i}.
  CapCutBall body(int i) const;

  /// Exact D_p(K_i, K_j) in the instance metric, (sum_{l in [min,max)} alpha_l^p)^{1/p}.
  double exact_distance(int i, int j) const;

  /// Partial sum S_N = sum_{i<=N} alpha_i.
  double alpha_partial_sum(int n) const;

  /// Exact re-verification of every invariant: strict monotonicity of theta
  /// and alpha, pairwise double-cap disjointness (no tolerance), eta = eps/4,
  /// theta_1 <= arccos(1-eps). Throws on violation.
  void verify() const;

 private:
  InstanceParams params_;
  std::vector<UnitVector> centers_;
  std::vector<double> thetas_;
  std::vector<double> alphas_;
  double eta_;
  std::vector<double> alpha_pow_prefix_;  // prefix sums of alpha_i^p
};

/// Builds the instance from params (alpha must be set): schedule, packing,
/// exact alpha_i = 2 * dp_ball_minus_cap(theta_i), and full verification.
HardInstance build_instance(const InstanceParams& params, int grid_points = 4096);

void save_instance(const HardInstance& instance, const std::filesystem::path& path);
HardInstance load_instance(const std::filesystem::path& path);

}  // namespace cbc
