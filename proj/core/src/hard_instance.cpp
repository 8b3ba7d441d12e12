// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cbc/hard_instance.hpp"

#include <cmath>
#include <fstream>

namespace cbc {

namespace {
constexpr double kPi = 3.141592653589793;
}

void InstanceParams::validate(bool require_alpha) const {
  if (!(p > 1.0)) throw std::invalid_argument("InstanceParams: p > 1 required");
  if (!(static_cast<double>(d) > (4.0 * p - 1.0) / (p - 1.0))) {
    throw std::invalid_argument("InstanceParams: d > (4p-1)/(p-1) required (strict)");
  }
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("InstanceParams: eps in (0,1) required");
  if (n_caps < 1) throw std::invalid_argument("InstanceParams: n_caps >= 1 required");
  if (require_alpha) {
    const double amax = std::acos(1.0 - eps);
    if (!(alpha > 0.0 && alpha <= amax)) {
      throw std::invalid_argument("InstanceParams: alpha must lie in (0, arccos(1-eps)]");
    }
  }
}

double schedule_exponent(int d, double p) { return 2.0 + (d - 1) / p; }

double theta_schedule(int i, double alpha, int d, double p) {
  if (i < 1) throw std::invalid_argument("theta_schedule: i >= 1 required");
  return alpha * std::pow(1.0 / i, 1.0 / schedule_exponent(d, p));
}

double packing_sum_bound(double alpha, int d, double p, int prefix_terms, int grid_points) {
  const double q = schedule_exponent(d, p);
  const double s = (d - 1) / q;
  if (!(s > 1.0)) throw std::invalid_argument("packing_sum_bound: (d-1)/q must exceed 1");
  const double z = sin_power_integral(kPi, d, grid_points);
  double prefix = 0.0;
  for (int i = 1; i <= prefix_terms; ++i) {
    const double phi = 2.0 * theta_schedule(i, alpha, d, p);
    if (phi >= kPi) return std::numeric_limits<double>::infinity();
    prefix += sin_power_integral(phi, d, grid_points) / z;
  }
  // sigma(C(phi)) <= phi^{d-1} / ((d-1) Z_d), so the tail is dominated by
  // (2 alpha)^{d-1}/((d-1) Z_d) * sum_{i>M} i^{-s} <= ... * M^{1-s}/(s-1).
  const double tail = std::pow(2.0 * alpha, d - 1) / ((d - 1) * z) *
                      std::pow(static_cast<double>(prefix_terms), 1.0 - s) / (s - 1.0);
  return prefix + tail;
}

Calibration calibrate_alpha(int d, double p, double eps, int grid_points) {
  InstanceParams probe{p, d, eps, 0.0, 1, 0};
  probe.validate(false);
  const double amax = std::acos(1.0 - eps);
  const int prefix_terms = 2000;
  double alpha = amax;
  for (int k = 0; k < 400; ++k, alpha *= 0.9) {
    const double sum = packing_sum_bound(alpha, d, p, prefix_terms, grid_points);
    if (sum < 0.5) return Calibration{alpha, sum, prefix_terms};
  }
  throw std::runtime_error("calibrate_alpha: no feasible alpha on the geometric grid");
}

std::vector<UnitVector> pack_caps(const InstanceParams& params,
                                  const std::vector<double>& thetas) {
  auto engine = make_stream(params.seed, stream::kPacking);
  const int n = static_cast<int>(thetas.size());
  std::vector<double> cos2theta(thetas.size());
  for (int j = 0; j < n; ++j) cos2theta[j] = std::cos(2.0 * thetas[j]);

  std::vector<UnitVector> centers;
  centers.reserve(thetas.size());
  constexpr int kBudget = 1000000;
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
      UnitVector u = sample_direction(params.d, engine);
      bool ok = true;
      for (int j = 0; j < i; ++j) {
        if (std::abs(u.dot(centers[j])) > cos2theta[j]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        centers.push_back(std::move(u));
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw std::runtime_error("pack_caps: rejection budget exhausted at index " +
                               std::to_string(i + 1) + "; calibration likely violated");
    }
  }
  return centers;
}

HardInstance::HardInstance(InstanceParams params, std::vector<UnitVector> centers,
                           std::vector<double> thetas, std::vector<double> alphas, double eta)
    : params_(params),
      centers_(std::move(centers)),
      thetas_(std::move(thetas)),
      alphas_(std::move(alphas)),
      eta_(eta) {
  if (centers_.size() != thetas_.size() || alphas_.size() != thetas_.size()) {
    throw std::invalid_argument("HardInstance: inconsistent cap/alpha list lengths");
  }
  alpha_pow_prefix_.resize(alphas_.size() + 1, 0.0);
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    alpha_pow_prefix_[i + 1] = alpha_pow_prefix_[i] + std::pow(alphas_[i], params_.p);
  }
}

CapCutBall HardInstance::body(int i) const {
  if (i < 1 || i > n() + 1) throw std::out_of_range("HardInstance::body: index out of range");
  std::vector<SlabCut> cuts;
  cuts.reserve(static_cast<std::size_t>(i - 1));
  for (int j = 0; j < i - 1; ++j) {
    cuts.push_back(SlabCut{centers_[static_cast<std::size_t>(j)],
                           thetas_[static_cast<std::size_t>(j)], true});
  }
  return CapCutBall::certified(params_.d, std::move(cuts));
}

double HardInstance::exact_distance(int i, int j) const {
  if (i < 1 || i > n() + 1 || j < 1 || j > n() + 1) {
    throw std::out_of_range("HardInstance::exact_distance: index out of range");
  }
  const int lo = std::min(i, j), hi = std::max(i, j);
  const double mass = alpha_pow_prefix_[static_cast<std::size_t>(hi - 1)] -
                      alpha_pow_prefix_[static_cast<std::size_t>(lo - 1)];
  return std::pow(mass, 1.0 / params_.p);
}

double HardInstance::alpha_partial_sum(int n_terms) const {
  if (n_terms < 0 || n_terms > n()) throw std::out_of_range("alpha_partial_sum: bad count");
  double s = 0.0;
  for (int i = 0; i < n_terms; ++i) s += alphas_[static_cast<std::size_t>(i)];
  return s;
}

void HardInstance::verify() const {
  params_.validate();
  const int m = n();
  if (m != params_.n_caps) throw std::runtime_error("HardInstance: cap count mismatch");
  if (eta_ != params_.eps / 4.0) throw std::runtime_error("HardInstance: eta != eps/4");
  if (thetas_[0] > std::acos(1.0 - params_.eps)) {
    throw std::runtime_error("HardInstance: theta_1 exceeds arccos(1-eps)");
  }
  for (int i = 1; i < m; ++i) {
    if (!(thetas_[i] < thetas_[i - 1])) throw std::runtime_error("HardInstance: thetas not strictly decreasing");
    if (!(alphas_[i] < alphas_[i - 1])) throw std::runtime_error("HardInstance: alphas not strictly decreasing");
  }
  // Exact pairwise double-cap disjointness: acos|<u_i,u_j>| > theta_i + theta_j,
  // checked as |<u_i,u_j>| < cos(theta_i + theta_j) with no tolerance.
  std::vector<double> ct(thetas_.size()), st(thetas_.size());
  for (int i = 0; i < m; ++i) {
    ct[i] = std::cos(thetas_[i]);
    st[i] = std::sin(thetas_[i]);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double cos_sum = ct[i] * ct[j] - st[i] * st[j];
      if (!(std::abs(centers_[i].dot(centers_[j])) < cos_sum)) {
        throw std::runtime_error("HardInstance: double caps " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " are not disjoint");
      }
    }
  }
}

HardInstance build_instance(const InstanceParams& params, int grid_points) {
  params.validate();
  std::vector<double> thetas(static_cast<std::size_t>(params.n_caps));
  for (int i = 1; i <= params.n_caps; ++i) {
    thetas[static_cast<std::size_t>(i - 1)] = theta_schedule(i, params.alpha, params.d, params.p);
  }
  std::vector<UnitVector> centers = pack_caps(params, thetas);
  std::vector<double> alphas(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    alphas[i] = 2.0 * dp_ball_minus_cap(thetas[i], params.d, params.p, grid_points);
  }
  HardInstance instance(params, std::move(centers), std::move(thetas), std::move(alphas),
                        params.eps / 4.0);
  instance.verify();
  return instance;
}

void save_instance(const HardInstance& instance, const std::filesystem::path& path) {
  ordered_json caps = ordered_json::array();
  for (int i = 0; i < instance.n(); ++i) {
    caps.push_back(ordered_json{{"center", instance.centers()[static_cast<std::size_t>(i)].coords()},
                                {"theta", instance.thetas()[static_cast<std::size_t>(i)]}});
  }
  const InstanceParams& p = instance.params();
  ordered_json j{{"version", 1},
                 {"params",
                  ordered_json{{"p", p.p},
                               {"d", p.d},
                               {"eps", p.eps},
                               {"alpha", p.alpha},
                               {"n_caps", p.n_caps},
                               {"seed", p.seed}}},
                 {"eta", instance.eta()},
                 {"caps", std::move(caps)},
                 {"alphas", instance.alphas()}};
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("save_instance: cannot open " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

HardInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_instance: cannot open " + path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_instance: corrupt file: " + std::string(e.what()));
  }
  if (!j.contains("version") || j["version"].get<int>() != 1) {
    throw std::runtime_error("load_instance: unsupported schema version");
  }
  const auto& jp = j.at("params");
  InstanceParams params{jp.at("p").get<double>(),    jp.at("d").get<int>(),
                        jp.at("eps").get<double>(),  jp.at("alpha").get<double>(),
                        jp.at("n_caps").get<int>(),  jp.at("seed").get<std::uint64_t>()};
  std::vector<UnitVector> centers;
  std::vector<double> thetas;
  for (const auto& jc : j.at("caps")) {
    centers.emplace_back(jc.at("center").get<Point>());
    thetas.push_back(jc.at("theta").get<double>());
  }
  HardInstance instance(params, std::move(centers), std::move(thetas),
                        j.at("alphas").get<std::vector<double>>(), j.at("eta").get<double>());
  instance.verify();
  return instance;
}

}  // namespace cbc
