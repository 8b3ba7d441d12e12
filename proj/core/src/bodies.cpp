// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cbc/bodies.hpp"

#include <algorithm>
#include <cmath>

namespace cbc {

namespace {
constexpr double kPi = 3.141592653589793;
constexpr double kHalfPi = 1.5707963267948966;
}  // namespace

Ball::Ball(Point center, double radius) : center_(std::move(center)), radius_(radius) {
  if (center_.size() < 2) throw std::invalid_argument("Ball: dimension must be >= 2");
  if (!(radius_ >= 0.0)) throw std::invalid_argument("Ball: radius must be >= 0");
}

double Ball::support(const UnitVector& u) const {
  if (u.dim() != dim()) throw std::invalid_argument("Ball::support: dimension mismatch");
  return dot(center_, u.coords()) + radius_;
}

bool Ball::contains(const Point& x) const {
  if (x.size() != center_.size()) throw std::invalid_argument("Ball::contains: dimension mismatch");
  return distance(x, center_) <= radius_;
}

ordered_json Ball::to_json() const {
  return ordered_json{{"kind", "ball"}, {"d", dim()}, {"center", center_}, {"radius", radius_}};
}

CapCutBall::CapCutBall(int d, std::vector<SlabCut> cuts) : d_(d), cuts_(std::move(cuts)) {
  validate_basic();
  verify_disjoint(cuts_);
}

CapCutBall::CapCutBall(int d, std::vector<SlabCut> cuts, Certified)
    : d_(d), cuts_(std::move(cuts)) {
  validate_basic();
}

CapCutBall CapCutBall::certified(int d, std::vector<SlabCut> cuts) {
  return CapCutBall(d, std::move(cuts), Certified{});
}

void CapCutBall::validate_basic() const {
  if (d_ < 2) throw std::invalid_argument("CapCutBall: dimension must be >= 2");
  for (const SlabCut& c : cuts_) {
    if (c.center.dim() != d_) throw std::invalid_argument("CapCutBall: cut dimension mismatch");
    if (!(c.angle > 0.0 && c.angle < kHalfPi)) {
      throw std::invalid_argument("CapCutBall: cut angle must lie in (0, pi/2)");
    }
  }
}

void CapCutBall::verify_disjoint(const std::vector<SlabCut>& cuts) {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      const double bound = cuts[i].angle + cuts[j].angle;
      const double rho = angular_distance(cuts[i].center, cuts[j].center);
      // Separation between every pair of cap centers involved, including
      // the antipodes of symmetric cuts.
      bool ok = rho > bound;
      if (ok && (cuts[i].symmetric || cuts[j].symmetric)) ok = kPi - rho > bound;
      if (!ok) {
        throw std::invalid_argument("CapCutBall: caps " + std::to_string(i) + " and " +
                                    std::to_string(j) + " overlap; support formula invalid");
      }
    }
  }
}

double CapCutBall::support(const UnitVector& u) const {
  if (u.dim() != d_) throw std::invalid_argument("CapCutBall::support: dimension mismatch");
  for (const SlabCut& c : cuts_) {
    double s = c.center.dot(u);
    if (c.symmetric) s = std::abs(s);
    const double rho = std::acos(std::clamp(s, -1.0, 1.0));
    if (rho < c.angle) return std::cos(c.angle - rho);  // unique cut under disjointness
  }
  return 1.0;
}

bool CapCutBall::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != d_) {
    throw std::invalid_argument("CapCutBall::contains: dimension mismatch");
  }
  if (norm(x) > 1.0) return false;
  for (const SlabCut& c : cuts_) {
    double s = dot(c.center.coords(), x);
    if (c.symmetric) s = std::abs(s);
    if (s > std::cos(c.angle)) return false;
  }
  return true;
}

double CapCutBall::max_angle() const {
  double m = 0.0;
  for (const SlabCut& c : cuts_) m = std::max(m, c.angle);
  return m;
}

ordered_json CapCutBall::to_json() const {
  ordered_json cuts = ordered_json::array();
  for (const SlabCut& c : cuts_) {
    ordered_json jc{{"center", c.center.coords()}, {"angle", c.angle}};
    if (!c.symmetric) jc["symmetric"] = false;
    cuts.push_back(std::move(jc));
  }
  return ordered_json{{"kind", "cap_cut_ball"}, {"d", d_}, {"cuts", std::move(cuts)}};
}

PointHull::PointHull(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("PointHull: point list must be nonempty");
  const std::size_t d = points_.front().size();
  if (d < 2) throw std::invalid_argument("PointHull: dimension must be >= 2");
  for (const Point& p : points_) {
    if (p.size() != d) throw std::invalid_argument("PointHull: inconsistent dimensions");
  }
}

double PointHull::support(const UnitVector& u) const {
  if (u.dim() != dim()) throw std::invalid_argument("PointHull::support: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& p : points_) best = std::max(best, dot(p, u.coords()));
  return best;
}

bool PointHull::contains(const Point&) const {
  throw UnsupportedOperation("PointHull::contains: no exact membership test");
}

ordered_json PointHull::to_json() const {
  return ordered_json{{"kind", "point_hull"}, {"d", dim()}, {"points", points_}};
}

std::unique_ptr<ConvexBody> body_from_json(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int d = j.at("d").get<int>();
  if (kind == "ball") {
    return std::make_unique<Ball>(j.at("center").get<Point>(), j.at("radius").get<double>());
  }
  if (kind == "cap_cut_ball") {
    std::vector<SlabCut> cuts;
    for (const auto& jc : j.at("cuts")) {
      cuts.push_back(SlabCut{UnitVector(jc.at("center").get<Point>()),
                             jc.at("angle").get<double>(),
                             jc.value("symmetric", true)});
    }
    return std::make_unique<CapCutBall>(d, std::move(cuts));
  }
  if (kind == "point_hull") {
    return std::make_unique<PointHull>(j.at("points").get<std::vector<Point>>());
  }
  throw std::invalid_argument("body_from_json: unknown kind '" + kind + "'");
}

DistanceEstimate dist_p(const ConvexBody& P, const ConvexBody& Q, double p,
                        const QuadratureSpec& quad) {
  if (P.dim() != Q.dim()) throw std::invalid_argument("dist_p: dimension mismatch");
  if (!(p >= 1.0)) throw std::invalid_argument("dist_p: p >= 1 required");
  quad.validate();
  auto engine = make_stream(quad.seed, stream::kDistP);
  const int n = quad.mc_samples;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const UnitVector y = sample_direction(P.dim(), engine);
    const double x = std::pow(std::abs(P.support(y) - Q.support(y)), p);
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  DistanceEstimate out;
  out.value = std::pow(mean, 1.0 / p);
  if (mean > 0.0 && n > 1) {
    const double var = std::max(0.0, (sum2 - n * mean * mean) / (n - 1));
    const double se_mean = std::sqrt(var / n);
    // delta method for mean^{1/p}
    out.std_error = (1.0 / p) * std::pow(mean, 1.0 / p - 1.0) * se_mean;
  }
  return out;
}

double dp_ball_minus_cap(double theta, int d, double p, int grid_points) {
  if (!(theta > 0.0 && theta <= kHalfPi)) {
    throw std::invalid_argument("dp_ball_minus_cap: theta must lie in (0, pi/2]");
  }
  if (d < 2) throw std::invalid_argument("dp_ball_minus_cap: d >= 2 required");
  if (!(p >= 1.0)) throw std::invalid_argument("dp_ball_minus_cap: p >= 1 required");
  const double z = sin_power_integral(kPi, d, grid_points);
  const int e = d - 2;
  auto sin_pow = [e](double t) {
    double x = std::sin(t), r = 1.0;
    for (int q = e; q > 0; q >>= 1, x *= x) {
      if (q & 1) r *= x;
    }
    return r;
  };
  const bool p_is_two = (p == 2.0);
  const double integral = simpson(
      [&](double t) {
        const double gap = 1.0 - std::cos(theta - t);
        const double gp = p_is_two ? gap * gap : std::pow(gap, p);
        return gp * sin_pow(t);
      },
      0.0, theta, grid_points);
  return std::pow(integral / z, 1.0 / p);
}

double dist_inf(const ConvexBody& P, const ConvexBody& Q, const QuadratureSpec& quad) {
  if (P.dim() != Q.dim()) throw std::invalid_argument("dist_inf: dimension mismatch");
  const auto* bp = dynamic_cast<const Ball*>(&P);
  const auto* bq = dynamic_cast<const Ball*>(&Q);
  if (bp && bq) {
    return distance(bp->center(), bq->center()) + std::abs(bp->radius() - bq->radius());
  }
  auto is_unit_ball = [](const Ball* b) {
    return b != nullptr && b->radius() == 1.0 && norm(b->center()) == 0.0;
  };
  const auto* cp = dynamic_cast<const CapCutBall*>(&P);
  const auto* cq = dynamic_cast<const CapCutBall*>(&Q);
  if ((is_unit_ball(bp) && cq) || (is_unit_ball(bq) && cp)) {
    const CapCutBall* c = cq ? cq : cp;
    return c->cuts().empty() ? 0.0 : 1.0 - std::cos(c->max_angle());
  }
  quad.validate();
  auto engine = make_stream(quad.seed, stream::kDistInf);
  double best = 0.0;
  for (int i = 0; i < quad.mc_samples; ++i) {
    const UnitVector y = sample_direction(P.dim(), engine);
    best = std::max(best, std::abs(P.support(y) - Q.support(y)));
  }
  return best;
}

double inscribed_ball_radius_bound(const ConvexBody& K, const QuadratureSpec& quad) {
  return 1.0 - dist_inf(K, Ball::unit(K.dim()), quad);
}

}  // namespace cbc
