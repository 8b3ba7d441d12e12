// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cbc/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace cbc {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Point operator+(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point add: dimension mismatch");
  Point r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point sub: dimension mismatch");
  Point r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Point operator*(double s, const Point& a) {
  Point r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = s * a[k];
  return r;
}

double distance(const Point& a, const Point& b) { return norm(a - b); }

Point zeros(int d) { return Point(static_cast<std::size_t>(d), 0.0); }

Point axis_point(int d, int k, double scale) {
  Point r = zeros(d);
  r.at(static_cast<std::size_t>(k)) = scale;
  return r;
}

UnitVector::UnitVector(Point coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("UnitVector: dimension must be >= 2");
  const double n = norm(coords_);
  if (n == 0.0 || !std::isfinite(n)) {
    throw std::invalid_argument("UnitVector: zero or non-finite vector");
  }
  // Inputs already unit to 1e-12 are kept verbatim so that serialized
  // directions reload bit-exactly.
  if (std::abs(n - 1.0) > 1e-12) {
    for (double& c : coords_) c /= n;
  }
}

UnitVector UnitVector::axis(int d, int k) { return UnitVector(axis_point(d, k)); }

UnitVector UnitVector::negated() const {
  Point c = coords_;
  for (double& x : c) x = -x;
  return UnitVector(std::move(c));
}

double UnitVector::dot(const UnitVector& other) const {
  return cbc::dot(coords_, other.coords_);
}

double angular_distance(const UnitVector& u, const UnitVector& v) {
  const double c = std::clamp(u.dot(v), -1.0, 1.0);
  return std::acos(c);
}

Cap::Cap(UnitVector c, double a) : center(std::move(c)), angle(a) {
  constexpr double kHalfPi = 1.5707963267948966;
  if (!(angle > 0.0 && angle <= kHalfPi)) {
    throw std::invalid_argument("Cap: angle must lie in (0, pi/2]");
  }
}

void QuadratureSpec::validate() const {
  if (mc_samples < 1) throw std::invalid_argument("QuadratureSpec: mc_samples >= 1 required");
  if (grid_points < 2) throw std::invalid_argument("QuadratureSpec: grid_points >= 2 required");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t root_seed, std::uint64_t stream_id) {
  return std::mt19937_64(splitmix64(splitmix64(root_seed) ^ stream_id));
}

UnitVector sample_direction(int d, std::mt19937_64& engine) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point c(static_cast<std::size_t>(d));
  for (;;) {
    for (double& x : c) x = gauss(engine);
    const double n = norm(c);
    if (n > 0.0) break;  // measure-zero rejection
  }
  return UnitVector(std::move(c));
}

std::vector<UnitVector> sample_uniform(int d, int n, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("sample_uniform: d >= 2 required");
  if (n < 1) throw std::invalid_argument("sample_uniform: n >= 1 required");
  auto engine = make_stream(seed, stream::kSampleUniform);
  std::vector<UnitVector> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(sample_direction(d, engine));
  return out;
}

namespace {
double ipow(double x, int e) {
  double r = 1.0;
  for (; e > 0; e >>= 1, x *= x) {
    if (e & 1) r *= x;
  }
  return r;
}
}  // namespace

double sin_power_integral(double theta, int d, int grid_points) {
  if (d < 2) throw std::invalid_argument("sin_power_integral: d >= 2 required");
  if (theta <= 0.0) return 0.0;
  const int e = d - 2;
  return simpson([e](double t) { return ipow(std::sin(t), e); }, 0.0, theta, grid_points);
}

double cap_area(double theta, int d, int grid_points) {
  constexpr double kPi = 3.141592653589793;
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("cap_area: theta must lie in [0, pi]");
  }
  if (theta == 0.0) return 0.0;
  return sin_power_integral(theta, d, grid_points) / sin_power_integral(kPi, d, grid_points);
}

double cap_area_bound(double theta, int d, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("cap_area_bound: gamma > 0 required");
  if (!(theta > 0.0)) throw std::invalid_argument("cap_area_bound: theta > 0 required");
  return gamma * std::sqrt(static_cast<double>(d)) * std::pow(theta, d - 2);
}

}  // namespace cbc
