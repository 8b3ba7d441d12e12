// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cbc/selectors.hpp"

#include <algorithm>
#include <cmath>

namespace cbc {

SteinerEstimate steiner(const ConvexBody& K, const QuadratureSpec& quad) {
  quad.validate();
  const int d = K.dim();
  const int m = quad.mc_samples;
  auto engine = make_stream(quad.seed, stream::kSteiner);
  Point sum = zeros(d), sum2 = zeros(d);
  for (int s = 0; s < m; ++s) {
    const UnitVector y = sample_direction(d, engine);
    const double h = K.support(y);
    for (int k = 0; k < d; ++k) {
      const double x = d * y[k] * h;
      sum[static_cast<std::size_t>(k)] += x;
      sum2[static_cast<std::size_t>(k)] += x * x;
    }
  }
  SteinerEstimate out;
  out.samples = m;
  out.point = zeros(d);
  double pooled = 0.0;
  for (int k = 0; k < d; ++k) {
    const double mean = sum[static_cast<std::size_t>(k)] / m;
    out.point[static_cast<std::size_t>(k)] = mean;
    if (m > 1) {
      const double var =
          std::max(0.0, (sum2[static_cast<std::size_t>(k)] - m * mean * mean) / (m - 1));
      pooled += var / m;
    }
  }
  out.std_error = std::sqrt(pooled);
  return out;
}

Point partial_selector(const HardInstance& instance, int i) {
  if (i < 1 || i > instance.n()) {
    throw std::out_of_range("partial_selector: index out of range");
  }
  const double sign = (i % 2 == 1) ? 1.0 : -1.0;
  return axis_point(instance.params().d, 0, sign * instance.eta() * instance.alpha(i));
}

std::optional<int> instance_prefix_index(const HardInstance& instance, const ConvexBody& K) {
  if (K.dim() != instance.params().d) return std::nullopt;
  if (const auto* b = dynamic_cast<const Ball*>(&K)) {
    if (b->radius() == 1.0 && norm(b->center()) == 0.0) return 1;  // K_1 = B
    return std::nullopt;
  }
  const auto* c = dynamic_cast<const CapCutBall*>(&K);
  if (c == nullptr) return std::nullopt;
  const int i = static_cast<int>(c->cuts().size()) + 1;
  if (i > instance.n()) return std::nullopt;
  for (std::size_t j = 0; j < c->cuts().size(); ++j) {
    const SlabCut& cut = c->cuts()[j];
    if (!cut.symmetric) return std::nullopt;
    if (cut.angle != instance.thetas()[j]) return std::nullopt;
    if (!(cut.center == instance.centers()[j])) return std::nullopt;
  }
  return i;
}

double bump(const HardInstance& instance, int i, const ConvexBody& K,
            const QuadratureSpec& quad) {
  if (i < 1 || i > instance.n()) throw std::out_of_range("bump: index out of range");
  const double r = instance.alpha(i) / 2.0;
  double dist;
  if (auto j = instance_prefix_index(instance, K)) {
    dist = instance.exact_distance(i, *j);
  } else {
    dist = dist_p(K, instance.body(i), instance.params().p, quad).value;
  }
  return std::max(1.0 - dist / r, 0.0);
}

std::optional<int> locate_bump(const HardInstance& instance, const ConvexBody& K,
                               const QuadratureSpec& quad) {
  if (auto j = instance_prefix_index(instance, K)) return j;
  const double p = instance.params().p;
  const double dist_to_first = dist_p(K, instance.body(1), p, quad).value;
  for (int i = 1; i <= instance.n(); ++i) {
    const double r = instance.alpha(i) / 2.0;
    // triangle inequality: D_p(K, K_i) >= |D_p(K, K_1) - D_p(K_1, K_i)|
    const double lower = std::abs(dist_to_first - instance.exact_distance(1, i));
    if (lower >= r) continue;
    const double dist =
        (i == 1) ? dist_to_first : dist_p(K, instance.body(i), p, quad).value;
    if (dist < r) return i;  // unique: the bump balls are pairwise disjoint
  }
  return std::nullopt;
}

SelectorOutput full_selector(const HardInstance& instance, const ConvexBody& K,
                             const QuadratureSpec& quad) {
  SelectorOutput out;
  if (auto j = instance_prefix_index(instance, K)) {
    out.point = partial_selector(instance, *j);
    out.active_bump = *j;
  } else {
    const SteinerEstimate st = steiner(K, quad);
    out.point = st.point;
    out.steiner_std_error = st.std_error;
    if (auto i = locate_bump(instance, K, quad)) {
      const double f = bump(instance, i.value(), K, quad);
      const Point target = partial_selector(instance, i.value());
      out.point = st.point + f * (target - st.point);
      out.active_bump = i;
    }
  }
  if (K.kind() != "point_hull") {
    out.containment_checked = true;
    if (!K.contains(out.point)) {
      throw SelectorContainmentError(
          "full_selector: point escaped the body (kind=" + std::string(K.kind()) +
          ", |x|=" + std::to_string(norm(out.point)) +
          ", bump=" + std::to_string(out.active_bump.value_or(0)) +
          "); eps may be too large or MC noise too high");
    }
  }
  return out;
}

std::vector<Point> steiner_trajectory(const HardInstance& instance, int n,
                                      const QuadratureSpec& quad) {
  if (n < 1 || n > instance.n()) throw std::out_of_range("steiner_trajectory: bad n");
  quad.validate();
  const int d = instance.params().d;
  const int m = quad.mc_samples;
  auto engine = make_stream(quad.seed, stream::kSteiner);

  struct Hit {
    int cut;       // 1-based cut index whose double cap contains the direction
    Point delta;   // d * y * (cos(theta - rho) - 1)
  };
  Point base = zeros(d);
  std::vector<Hit> hits;
  for (int s = 0; s < m; ++s) {
    const UnitVector y = sample_direction(d, engine);
    for (int k = 0; k < d; ++k) base[static_cast<std::size_t>(k)] += d * y[k];
    for (int j = 0; j < n; ++j) {
      const double c = std::abs(y.dot(instance.centers()[static_cast<std::size_t>(j)]));
      const double rho = std::acos(std::clamp(c, -1.0, 1.0));
      const double theta = instance.thetas()[static_cast<std::size_t>(j)];
      if (rho < theta) {
        const double gap = std::cos(theta - rho) - 1.0;
        hits.push_back(Hit{j + 1, (d * gap) * y.coords()});
        break;  // caps are disjoint
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.cut < b.cut; });

  std::vector<Point> traj;
  traj.reserve(static_cast<std::size_t>(n));
  Point acc = base;
  std::size_t next = 0;
  for (int i = 1; i <= n; ++i) {
    // K_i uses cuts j < i
    while (next < hits.size() && hits[next].cut < i) {
      acc = acc + hits[next].delta;
      ++next;
    }
    traj.push_back((1.0 / m) * acc);
  }
  return traj;
}

}  // namespace cbc
