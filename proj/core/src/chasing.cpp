// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cbc/chasing.hpp"

#include <algorithm>
#include <cmath>

namespace cbc {

ordered_json RunReport::to_json() const {
  return ordered_json{{"points", trajectory.points},
                      {"step_costs", trajectory.step_costs},
                      {"total", trajectory.total},
                      {"opt_cost", opt_cost},
                      {"prefix_movements", prefix_movements}};
}

namespace {

Trajectory trace(const std::vector<const ConvexBody*>& sequence, const Selector& select, int d) {
  Trajectory traj;
  traj.points.push_back(zeros(d));
  for (const ConvexBody* body : sequence) {
    Point x = select(*body);
    traj.step_costs.push_back(distance(x, traj.points.back()));
    traj.total += traj.step_costs.back();
    traj.points.push_back(std::move(x));
  }
  return traj;
}

std::vector<double> prefix_sums(const std::vector<double>& steps) {
  std::vector<double> out;
  out.reserve(steps.size());
  double acc = 0.0;
  for (double s : steps) out.push_back(acc += s);
  return out;
}

}  // namespace

RunReport run_nested(const std::vector<const ConvexBody*>& sequence, const Selector& select,
                     const QuadratureSpec& quad, int check_directions) {
  if (sequence.empty()) throw std::invalid_argument("run_nested: empty sequence");
  const int d = sequence.front()->dim();
  for (const ConvexBody* b : sequence) {
    if (b->dim() != d) throw std::invalid_argument("run_nested: dimension mismatch");
  }
  auto engine = make_stream(quad.seed, stream::kNestCheck);
  std::vector<UnitVector> dirs;
  for (int k = 0; k < check_directions; ++k) dirs.push_back(sample_direction(d, engine));
  for (const UnitVector& y : dirs) {
    double prev = 1.0;  // all sets inside the unit ball
    for (std::size_t t = 0; t < sequence.size(); ++t) {
      const double h = sequence[t]->support(y);
      if (h > prev + 1e-9) {
        throw std::invalid_argument("run_nested: sequence not nested at step " +
                                    std::to_string(t + 1));
      }
      prev = h;
    }
  }
  RunReport report;
  report.trajectory = trace(sequence, select, d);
  report.prefix_movements = prefix_sums(report.trajectory.step_costs);
  report.opt_cost = opt_nested(zeros(d), *sequence.back());
  return report;
}

double opt_nested(const Point& x0, const ConvexBody& last) {
  if (last.contains(x0)) return 0.0;  // PointHull throws here
  if (const auto* b = dynamic_cast<const Ball*>(&last)) {
    return std::max(0.0, distance(x0, b->center()) - b->radius());
  }
  const auto* c = dynamic_cast<const CapCutBall*>(&last);
  if (c == nullptr) throw UnsupportedOperation("opt_nested: body kind not projectable");

  // Dykstra alternating projections onto the unit ball and each slab.
  const std::size_t n_sets = 1 + c->cuts().size();
  std::vector<Point> increments(n_sets, zeros(c->dim()));
  Point x = x0;
  constexpr int kMaxIter = 100000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const Point x_before = x;
    for (std::size_t s = 0; s < n_sets; ++s) {
      Point y = x + increments[s];
      Point projected;
      if (s == 0) {
        const double r = norm(y);
        projected = (r > 1.0) ? (1.0 / r) * y : y;
      } else {
        const SlabCut& cut = c->cuts()[s - 1];
        const double t = dot(cut.center.coords(), y);
        const double hi = std::cos(cut.angle);
        const double lo = cut.symmetric ? -hi : -std::numeric_limits<double>::infinity();
        const double tc = std::clamp(t, lo, hi);
        projected = y + (tc - t) * cut.center.coords();
      }
      increments[s] = y - projected;
      x = std::move(projected);
    }
    if (distance(x, x_before) < 1e-10) break;
  }
  return distance(x0, x);
}

RunReport alternating_demo(const ConvexBody& K, const ConvexBody& K_prime, int steps,
                           const Selector& select, const Point& witness) {
  if (steps < 1) throw std::invalid_argument("alternating_demo: steps >= 1 required");
  if (K.dim() != K_prime.dim()) throw std::invalid_argument("alternating_demo: dimension mismatch");
  std::vector<const ConvexBody*> sequence;
  sequence.reserve(static_cast<std::size_t>(steps));
  for (int t = 0; t < steps; ++t) sequence.push_back(t % 2 == 0 ? &K : &K_prime);
  RunReport report;
  report.trajectory = trace(sequence, select, K.dim());
  report.prefix_movements = prefix_sums(report.trajectory.step_costs);
  report.opt_cost = norm(witness);
  return report;
}

std::vector<ProbePoint> competitiveness_probe(ProbeSelector kind, const HardInstance& instance,
                                              int n, const QuadratureSpec& quad) {
  if (n < 1 || n > instance.n()) throw std::out_of_range("competitiveness_probe: bad n");
  std::vector<int> checkpoints;
  for (int c = 10; c < n; c *= 10) checkpoints.push_back(c);
  checkpoints.push_back(n);

  std::vector<double> movement(static_cast<std::size_t>(n));  // M_N for N = 1..n
  switch (kind) {
    case ProbeSelector::kPartial: {
      // x_1 = eta alpha_1 e_1; consecutive moves are eta (alpha_i + alpha_{i+1}).
      double acc = instance.eta() * instance.alpha(1);
      movement[0] = acc;
      for (int i = 1; i < n; ++i) {
        acc += instance.eta() * (instance.alpha(i) + instance.alpha(i + 1));
        movement[static_cast<std::size_t>(i)] = acc;
      }
      break;
    }
    case ProbeSelector::kSteiner: {
      const std::vector<Point> traj = steiner_trajectory(instance, n, quad);
      double acc = norm(traj.front());
      movement[0] = acc;
      for (int i = 1; i < n; ++i) {
        acc += distance(traj[static_cast<std::size_t>(i)], traj[static_cast<std::size_t>(i - 1)]);
        movement[static_cast<std::size_t>(i)] = acc;
      }
      break;
    }
    case ProbeSelector::kConstantOrigin: {
      // the origin is interior to every K_i
      break;
    }
  }
  std::vector<ProbePoint> out;
  for (int c : checkpoints) out.push_back(ProbePoint{c, movement[static_cast<std::size_t>(c - 1)]});
  return out;
}

}  // namespace cbc
