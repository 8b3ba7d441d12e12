// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string_view>

#include <json.hpp>

#include "cbc/sphere.hpp"

namespace cbc {

using ordered_json = nlohmann::ordered_json;

struct UnsupportedOperation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A convex body given by its exact support-function oracle.
class ConvexBody {
 public:
  virtual ~ConvexBody() = default;

  virtual std::string_view kind() const = 0;
  virtual int dim() const = 0;
  virtual double support(const UnitVector& u) const = 0;

  /// Exact membership test. Throws UnsupportedOperation where no exact
  /// test exists (PointHull).
  virtual bool contains(const Point& x) const = 0;

  virtual ordered_json to_json() const = 0;
};

class Ball final : public ConvexBody {
 public:
  Ball(Point center, double radius);
  static Ball unit(int d) { return Ball(zeros(d), 1.0); }

  std::string_view kind() const override { return "ball"; }
  int dim() const override { return static_cast<int>(center_.size()); }
  double support(const UnitVector& u) const override;
  bool contains(const Point& x) const override;
  ordered_json to_json() const override;

  const Point& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Point center_;
  double radius_;
};

/// One slab cut of the unit ball. With symmetric = true this removes the
/// solid double cap (constraint |<u,x>| <= cos theta), otherwise only the
/// cap around +u (<u,x> <= cos theta).
struct SlabCut {
  UnitVector center;
  double angle;  // in (0, pi/2) strictly
  bool symmetric = true;
};

/// The unit ball with pairwise disjoint (double) caps removed. The support
/// formula is closed-form and exact only under disjointness, which the
/// public constructor verifies; overlapping cuts are rejected.
class CapCutBall final : public ConvexBody {
 public:
  CapCutBall(int d, std::vector<SlabCut> cuts);

  /// Skips the pairwise disjointness check; for builders that certify it
  /// separately (the hard instance verifies all pairs exactly once).
  static CapCutBall certified(int d, std::vector<SlabCut> cuts);

  std::string_view kind() const override { return "cap_cut_ball"; }
  int dim() const override { return d_; }
  double support(const UnitVector& u) const override;
  bool contains(const Point& x) const override;
  ordered_json to_json() const override;

  const std::vector<SlabCut>& cuts() const { return cuts_; }

  /// Largest cut angle, 0 if there are no cuts.
  double max_angle() const;

  static void verify_disjoint(const std::vector<SlabCut>& cuts);

 private:
  struct Certified {};
  CapCutBall(int d, std::vector<SlabCut> cuts, Certified);
  void validate_basic() const;

  int d_;
  std::vector<SlabCut> cuts_;
};

class PointHull final : public ConvexBody {
 public:
  explicit PointHull(std::vector<Point> points);

  std::string_view kind() const override { return "point_hull"; }
  int dim() const override { return static_cast<int>(points_.front().size()); }
  double support(const UnitVector& u) const override;
  bool contains(const Point& x) const override;  // throws UnsupportedOperation
  ordered_json to_json() const override;

  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
};

std::unique_ptr<ConvexBody> body_from_json(const ordered_json& j);

struct DistanceEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo estimate of D_p(P, Q) = (∫ |h_P - h_Q|^p dσ)^{1/p}, using a
/// common direction sample for both support functions.
DistanceEstimate dist_p(const ConvexBody& P, const ConvexBody& Q, double p,
                        const QuadratureSpec& quad);

/// Exact D_p(B, B - C(v, theta)) for a single cap of angle theta on the
/// unit ball, via 1-D quadrature of the support gap 1 - cos(theta - t).
double dp_ball_minus_cap(double theta, int d, double p, int grid_points = 4096);

/// D_inf(P, Q). Exact for ball/ball and unit-ball/CapCutBall pairs;
/// otherwise the max over sampled directions (a lower estimate).
double dist_inf(const ConvexBody& P, const ConvexBody& Q, const QuadratureSpec& quad);

/// Radius bound 1 - D_inf(K, B) for K ⊆ B with 0 ∈ K: K contains the
/// centered ball of this radius.
double inscribed_ball_radius_bound(const ConvexBody& K, const QuadratureSpec& quad);

}  // namespace cbc
