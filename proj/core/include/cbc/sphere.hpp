// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace cbc {

using Point = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);
double distance(const Point& a, const Point& b);
Point zeros(int d);
Point axis_point(int d, int k, double scale = 1.0);

/// A direction on S^{d-1}. The constructor normalizes and rejects the
/// zero vector; dimension must be at least 2.
class UnitVector {
 public:
  explicit UnitVector(Point coords);

  static UnitVector axis(int d, int k);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Point& coords() const { return coords_; }
  double operator[](int k) const { return coords_[k]; }

  UnitVector negated() const;
  double dot(const UnitVector& other) const;

  bool operator==(const UnitVector& other) const { return coords_ == other.coords_; }

 private:
  Point coords_;
};

/// Geodesic distance on the sphere: arccos<u,v> in [0, pi].
double angular_distance(const UnitVector& u, const UnitVector& v);

/// Spherical cap C(u, theta), angle restricted to (0, pi/2].
struct Cap {
  UnitVector center;
  double angle;

  Cap(UnitVector c, double a);
};

/// Discretization knobs for sphere integrals: Monte Carlo sample count,
/// 1-D quadrature resolution, and the root seed for derived streams.
struct QuadratureSpec {
  int mc_samples = 200000;
  int grid_points = 4096;
  std::uint64_t seed = 42;

  void validate() const;
};

// Stream ids for deriving independent engines from one root seed.
// make_stream(seed, id) feeds (seed, id) through splitmix64; distinct ids
// give distinct, reproducible streams.
namespace stream {
inline constexpr std::uint64_t kSampleUniform = 1;
inline constexpr std::uint64_t kDistP = 2;
inline constexpr std::uint64_t kDistInf = 3;
inline constexpr std::uint64_t kSteiner = 4;
inline constexpr std::uint64_t kPacking = 5;
inline constexpr std::uint64_t kNestCheck = 6;
inline constexpr std::uint64_t kCorpus = 7;
}  // namespace stream

std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 make_stream(std::uint64_t root_seed, std::uint64_t stream_id);

/// One uniform direction: d independent standard normals, normalized.
UnitVector sample_direction(int d, std::mt19937_64& engine);

/// n independent uniform directions, deterministic given seed
/// (stream::kSampleUniform of the given root seed).
std::vector<UnitVector> sample_uniform(int d, int n, std::uint64_t seed);

/// Composite Simpson on [a, b] with at least `intervals` subintervals.
template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
  if (intervals < 2) intervals = 2;
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double acc = f(a) + f(b);
  for (int k = 1; k < intervals; ++k) {
    acc += f(a + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

/// Integral of sin^{d-2} t over [0, theta].
double sin_power_integral(double theta, int d, int grid_points = 4096);

/// Normalized area of a cap of angle theta on S^{d-1}:
/// integral of sin^{d-2} over [0, theta], normalized by the [0, pi] value.
double cap_area(double theta, int d, int grid_points = 4096);

/// Power-law cap-area majorant gamma * sqrt(d) * theta^{d-2},
/// valid on (0, pi/2) for a suitable gamma (fitted, see constants.hpp).
double cap_area_bound(double theta, int d, double gamma);

}  // namespace cbc
