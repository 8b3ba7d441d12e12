// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include "cbc/hard_instance.hpp"

using namespace cbc;

namespace {

InstanceParams small_params(int n_caps = 100) {
  InstanceParams params;
  params.alpha = std::acos(1.0 - params.eps);
  params.n_caps = n_caps;
  return params;
}

}  // namespace

TEST_CASE("parameter validation") {
  InstanceParams params = small_params();
  CHECK_NOTHROW(params.validate());

  params.d = 7;  // (4p-1)/(p-1) = 7 at p = 2; the inequality is strict
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params = small_params();
  params.p = 1.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params = small_params();
  params.eps = 1.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params = small_params();
  params.alpha = std::acos(1.0 - params.eps) + 1e-6;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.alpha = 0.0;
  CHECK_NOTHROW(params.validate(false));
}

TEST_CASE("schedule") {
  // q = 2 + (d-1)/p = 5.5 at the defaults
  CHECK(schedule_exponent(8, 2.0) == doctest::Approx(5.5));
  const double alpha = 0.4;
  CHECK(theta_schedule(1, alpha, 8, 2.0) == doctest::Approx(alpha));
  // 2048 = 2^11 and 2048^{2/11} = 4, so theta_2048 = alpha / 4 exactly
  CHECK(theta_schedule(2048, alpha, 8, 2.0) == doctest::Approx(alpha / 4.0).epsilon(1e-12));
  for (int i = 1; i < 50; ++i) {
    CHECK(theta_schedule(i + 1, alpha, 8, 2.0) < theta_schedule(i, alpha, 8, 2.0));
  }
}

TEST_CASE("packing sum bound and calibration") {
  const double amax = std::acos(0.9);
  const double sum = packing_sum_bound(amax, 8, 2.0);
  CHECK(sum == doctest::Approx(0.2233408).epsilon(1e-4));  // frozen reference value
  CHECK(sum < 0.5);
  // smaller alpha shrinks the caps, so the certified sum shrinks too
  CHECK(packing_sum_bound(amax / 2.0, 8, 2.0) < sum);

  const Calibration cal = calibrate_alpha(8, 2.0, 0.1);
  // the cap budget is already met at the largest admissible alpha
  CHECK(cal.alpha == doctest::Approx(amax).epsilon(1e-12));
  CHECK(cal.packing_sum == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("cap packing is exactly disjoint") {
  const InstanceParams params = small_params(50);
  std::vector<double> thetas;
  for (int i = 1; i <= params.n_caps; ++i) {
    thetas.push_back(theta_schedule(i, params.alpha, params.d, params.p));
  }
  const auto centers = pack_caps(params, thetas);
  REQUIRE(centers.size() == thetas.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    // rejection accepts u only outside every doubled cap C(u_j, 2 theta_j)
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(std::abs(centers[i].dot(centers[j])) <= std::cos(2.0 * thetas[j]));
    }
  }
}

TEST_CASE("built instance invariants") {
  const InstanceParams params = small_params(100);
  const HardInstance inst = build_instance(params);

  CHECK(inst.n() == 100);
  CHECK(inst.eta() == params.eps / 4.0);
  CHECK_NOTHROW(inst.verify());

  // alpha_i is exactly twice the single-cap quadrature value
  for (int i : {1, 7, 100}) {
    CHECK(inst.alpha(i) == 2.0 * dp_ball_minus_cap(inst.theta(i), params.d, params.p));
  }

  // exact instance metric: consecutive distance is alpha_i, and the general
  // pairwise value is the l_p norm of the alphas in between
  CHECK(inst.exact_distance(1, 2) == doctest::Approx(inst.alpha(1)).epsilon(1e-12));
  CHECK(inst.exact_distance(3, 3) == 0.0);
  CHECK(inst.exact_distance(2, 9) == inst.exact_distance(9, 2));
  double mass = 0.0;
  for (int l = 2; l < 9; ++l) mass += std::pow(inst.alpha(l), params.p);
  CHECK(inst.exact_distance(2, 9) == doctest::Approx(std::pow(mass, 1.0 / params.p)).epsilon(1e-12));

  // bodies: K_1 is the uncut ball, K_i carries i-1 cuts
  CHECK(inst.body(1).cuts().empty());
  CHECK(inst.body(5).cuts().size() == 4);
  CHECK(inst.body(inst.n() + 1).cuts().size() == 100);
  CHECK_THROWS_AS(inst.body(0), std::out_of_range);
  CHECK_THROWS_AS(inst.body(inst.n() + 2), std::out_of_range);

  // partial sums
  CHECK(inst.alpha_partial_sum(0) == 0.0);
  CHECK(inst.alpha_partial_sum(2) == doctest::Approx(inst.alpha(1) + inst.alpha(2)).epsilon(1e-12));
}

TEST_CASE("save and load round trip bit-exactly") {
  const InstanceParams params = small_params(40);
  const HardInstance inst = build_instance(params);
  const auto path = std::filesystem::temp_directory_path() / "cbclab_test_instance.json";

  save_instance(inst, path);
  const HardInstance loaded = load_instance(path);

  CHECK(loaded.n() == inst.n());
  CHECK(loaded.eta() == inst.eta());
  CHECK(loaded.thetas() == inst.thetas());
  CHECK(loaded.alphas() == inst.alphas());
  for (int i = 0; i < inst.n(); ++i) {
    CHECK(loaded.centers()[i] == inst.centers()[i]);
  }
  std::filesystem::remove(path);
}

TEST_CASE("load rejects tampered instances") {
  const InstanceParams params = small_params(10);
  const HardInstance inst = build_instance(params);
  const auto path = std::filesystem::temp_directory_path() / "cbclab_tampered_instance.json";
  save_instance(inst, path);

  std::ifstream in(path);
  ordered_json j;
  in >> j;
  in.close();

  // duplicate cap center: double caps 1 and 2 now overlap
  ordered_json bad = j;
  bad["caps"][1]["center"] = bad["caps"][0]["center"];
  {
    std::ofstream out(path);
    out << bad.dump();
  }
  CHECK_THROWS_AS(load_instance(path), std::runtime_error);

  // non-monotone schedule
  bad = j;
  bad["alphas"][3] = bad["alphas"][2];
  {
    std::ofstream out(path);
    out << bad.dump();
  }
  CHECK_THROWS_AS(load_instance(path), std::runtime_error);

  // wrong eta
  bad = j;
  bad["eta"] = 0.5;
  {
    std::ofstream out(path);
    out << bad.dump();
  }
  CHECK_THROWS_AS(load_instance(path), std::runtime_error);

  std::filesystem::remove(path);
}
