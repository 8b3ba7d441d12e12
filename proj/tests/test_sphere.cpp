// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cbc/sphere.hpp"

using namespace cbc;

namespace {
constexpr double kPi = 3.141592653589793;
}

TEST_CASE("vector helpers") {
  const Point a{1.0, 2.0, 2.0};
  const Point b{0.0, -1.0, 1.0};
  CHECK(dot(a, b) == doctest::Approx(0.0));
  CHECK(norm(a) == doctest::Approx(3.0));
  CHECK(distance(a, a) == 0.0);
  CHECK((a + b)[1] == doctest::Approx(1.0));
  CHECK((a - b)[2] == doctest::Approx(1.0));
  CHECK((2.0 * a)[0] == doctest::Approx(2.0));
  CHECK(zeros(4) == Point{0.0, 0.0, 0.0, 0.0});
  CHECK(axis_point(3, 1, 2.5) == Point{0.0, 2.5, 0.0});
}

TEST_CASE("unit vector normalizes and validates") {
  const UnitVector u(Point{3.0, 4.0});
  CHECK(u[0] == doctest::Approx(0.6));
  CHECK(u[1] == doctest::Approx(0.8));
  CHECK(u.dim() == 2);
  CHECK_THROWS_AS(UnitVector(Point{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(UnitVector(Point{1.0}), std::invalid_argument);

  const UnitVector e0 = UnitVector::axis(3, 0);
  CHECK(e0.coords() == Point{1.0, 0.0, 0.0});
  CHECK(e0.negated().coords() == Point{-1.0, 0.0, 0.0});
  CHECK(e0.dot(e0.negated()) == doctest::Approx(-1.0));

  // already-unit inputs are preserved bit-for-bit (round-trip invariant)
  const Point exact{0.6, 0.8};
  CHECK(UnitVector(exact).coords() == exact);
}

TEST_CASE("angular distance") {
  const UnitVector e0 = UnitVector::axis(3, 0);
  const UnitVector e1 = UnitVector::axis(3, 1);
  CHECK(angular_distance(e0, e1) == doctest::Approx(kPi / 2));
  CHECK(angular_distance(e0, e0.negated()) == doctest::Approx(kPi));
  CHECK(angular_distance(e0, e0) == doctest::Approx(0.0));
}

TEST_CASE("cap angle restricted to (0, pi/2]") {
  const UnitVector e0 = UnitVector::axis(3, 0);
  CHECK_NOTHROW(Cap(e0, 0.3));
  CHECK_THROWS_AS(Cap(e0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Cap(e0, 1.6), std::invalid_argument);
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec quad;
  CHECK_NOTHROW(quad.validate());
  quad.mc_samples = 0;
  CHECK_THROWS_AS(quad.validate(), std::invalid_argument);
  quad = QuadratureSpec{};
  quad.grid_points = 1;
  CHECK_THROWS_AS(quad.validate(), std::invalid_argument);
}

TEST_CASE("streams are deterministic and distinct") {
  auto a1 = make_stream(42, stream::kSteiner);
  auto a2 = make_stream(42, stream::kSteiner);
  auto b = make_stream(42, stream::kDistP);
  CHECK(a1() == a2());
  CHECK(a1() != b());
  CHECK(splitmix64(1) != splitmix64(2));
}

TEST_CASE("sampled directions are uniform-ish unit vectors") {
  const int d = 5;
  auto engine = make_stream(7, stream::kSampleUniform);
  Point mean = zeros(d);
  const int n = 20000;
  for (int s = 0; s < n; ++s) {
    const UnitVector y = sample_direction(d, engine);
    CHECK(std::abs(norm(y.coords()) - 1.0) < 1e-12);
    mean = mean + (1.0 / n) * y.coords();
  }
  // each coordinate has variance 1/d; the mean should be ~3/sqrt(n*d) small
  CHECK(norm(mean) < 0.02);

  const auto batch1 = sample_uniform(d, 10, 123);
  const auto batch2 = sample_uniform(d, 10, 123);
  for (int k = 0; k < 10; ++k) CHECK(batch1[k] == batch2[k]);
}

TEST_CASE("simpson quadrature") {
  CHECK(simpson([](double t) { return std::sin(t); }, 0.0, kPi, 2048) == doctest::Approx(2.0));
  CHECK(simpson([](double t) { return t * t; }, 0.0, 1.0, 64) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("sin power integral closed forms") {
  const double theta = 0.7;
  // d = 2: integrand is 1
  CHECK(sin_power_integral(theta, 2) == doctest::Approx(theta));
  // d = 3: integral of sin = 1 - cos
  CHECK(sin_power_integral(theta, 3) == doctest::Approx(1.0 - std::cos(theta)));
  // d = 4: (theta - sin cos)/2
  CHECK(sin_power_integral(theta, 4) ==
        doctest::Approx((theta - std::sin(theta) * std::cos(theta)) / 2.0));
}

TEST_CASE("cap area") {
  // d = 3: normalized cap area is (1 - cos theta)/2
  CHECK(cap_area(0.5, 3) == doctest::Approx((1.0 - std::cos(0.5)) / 2.0));
  CHECK(cap_area(kPi, 8) == doctest::Approx(1.0));
  CHECK(cap_area(0.2, 8) < cap_area(0.3, 8));

  // power-law majorant with a generous constant dominates small caps
  for (double theta : {0.05, 0.1, 0.3, 1.0, 1.5}) {
    CHECK(cap_area(theta, 8) <= cap_area_bound(theta, 8, 1.0));
  }
}
