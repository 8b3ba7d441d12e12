// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#include "cbc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace cbc {

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}  // namespace

ExperimentConfig ExperimentConfig::from_json(const ordered_json& j) {
  ExperimentConfig cfg;
  if (j.contains("p")) cfg.params.p = j["p"].get<double>();
  if (j.contains("d")) cfg.params.d = j["d"].get<int>();
  if (j.contains("eps")) cfg.params.eps = j["eps"].get<double>();
  if (j.contains("alpha")) cfg.params.alpha = j["alpha"].get<double>();
  if (j.contains("n_caps")) cfg.params.n_caps = j["n_caps"].get<int>();
  if (j.contains("seed")) {
    cfg.params.seed = j["seed"].get<std::uint64_t>();
    cfg.quad.seed = cfg.params.seed;
  }
  if (j.contains("samples")) cfg.quad.mc_samples = j["samples"].get<int>();
  if (j.contains("grid")) cfg.quad.grid_points = j["grid"].get<int>();
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("instance")) cfg.instance_path = j["instance"].get<std::string>();
  if (j.contains("corpus_pairs")) cfg.corpus_pairs = j["corpus_pairs"].get<int>();
  if (j.contains("steiner_pairs")) cfg.steiner_pairs = j["steiner_pairs"].get<int>();
  if (j.contains("contain_bodies")) cfg.contain_bodies = j["contain_bodies"].get<int>();
  if (j.contains("probe_samples")) cfg.probe_samples = j["probe_samples"].get<int>();
  if (j.contains("demo_steps")) cfg.demo_steps = j["demo_steps"].get<int>();
  return cfg;
}

void CommandResult::add(const std::string& name, bool ok, double value, double bound,
                        double tol) {
  checks.push_back(Check{name, ok, value, bound, tol});
  passed = passed && ok;
}

ordered_json CommandResult::summary() const {
  ordered_json jchecks = ordered_json::array();
  for (const Check& c : checks) {
    jchecks.push_back(ordered_json{{"name", c.name},
                                   {"passed", c.passed},
                                   {"value", c.value},
                                   {"bound", c.bound},
                                   {"tolerance", c.tolerance}});
  }
  return ordered_json{{"command", command}, {"passed", passed}, {"checks", std::move(jchecks)}};
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("write_text_atomic: cannot open " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  out << header << "\n";
  out.precision(17);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out << ",";
      out << row[k];
    }
    out << "\n";
  }
  write_text_atomic(path, out.str());
}

namespace {

void merge_summary(const ExperimentConfig& cfg, const CommandResult& result) {
  const std::filesystem::path path = cfg.out_dir / "summary.json";
  ordered_json summary = ordered_json::object();
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      in >> summary;
    } catch (const nlohmann::json::exception&) {
      summary = ordered_json::object();
    }
  }
  summary[result.command] = result.summary();
  write_text_atomic(path, summary.dump(2) + "\n");
}

HardInstance load_for(const ExperimentConfig& cfg) {
  const auto path = cfg.instance_file();
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("instance file missing: " + path.string() +
                             " (run build-instance first)");
  }
  return load_instance(path);
}

double harmonic(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

Point random_interior_point(int d, double max_radius, std::mt19937_64& engine) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const UnitVector u = sample_direction(d, engine);
  const double r = max_radius * std::pow(unif(engine), 1.0 / d);
  return r * u.coords();
}

std::vector<SlabCut> random_disjoint_cuts(int d, int count, std::mt19937_64& engine) {
  std::uniform_real_distribution<double> angle_dist(0.08, 0.3);
  std::vector<SlabCut> cuts;
  while (static_cast<int>(cuts.size()) < count) {
    const double theta = angle_dist(engine);
    const UnitVector u = sample_direction(d, engine);
    bool ok = true;
    for (const SlabCut& c : cuts) {
      const double rho = std::acos(std::clamp(std::abs(u.dot(c.center)), -1.0, 1.0));
      if (rho <= theta + c.angle + 0.05) {
        ok = false;
        break;
      }
    }
    if (ok) cuts.push_back(SlabCut{u, theta, true});
  }
  return cuts;
}

}  // namespace

std::vector<std::unique_ptr<ConvexBody>> random_bodies(int d, int count, std::uint64_t seed,
                                                       bool include_hulls) {
  auto engine = make_stream(seed, stream::kCorpus);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> cut_count(1, 3);
  std::uniform_int_distribution<int> hull_count(3, 12);
  std::vector<std::unique_ptr<ConvexBody>> bodies;
  const int kinds = include_hulls ? 3 : 2;
  for (int i = 0; i < count; ++i) {
    switch (i % kinds) {
      case 0: {
        const Point c = random_interior_point(d, 0.25, engine);
        const double r = 0.3 + unif(engine) * (1.0 - norm(c) - 0.3);
        bodies.push_back(std::make_unique<Ball>(c, r));
        break;
      }
      case 1: {
        bodies.push_back(std::make_unique<CapCutBall>(
            d, random_disjoint_cuts(d, cut_count(engine), engine)));
        break;
      }
      default: {
        std::vector<Point> pts;
        const int m = hull_count(engine);
        for (int k = 0; k < m; ++k) pts.push_back(random_interior_point(d, 0.9, engine));
        bodies.push_back(std::make_unique<PointHull>(std::move(pts)));
        break;
      }
    }
  }
  return bodies;
}

CommandResult cmd_build_instance(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "build-instance";
  InstanceParams params = cfg.params;
  params.validate(false);

  double packing_sum;
  if (params.alpha == 0.0) {
    const Calibration cal = calibrate_alpha(params.d, params.p, params.eps, cfg.quad.grid_points);
    params.alpha = cal.alpha;
    packing_sum = cal.packing_sum;
  } else {
    params.validate(true);
    packing_sum = packing_sum_bound(params.alpha, params.d, params.p, 2000, cfg.quad.grid_points);
  }
  result.add("packing_sum_certificate", packing_sum < 0.5, packing_sum, 0.5);
  result.add("alpha_leq_arccos_1_minus_eps", params.alpha <= std::acos(1.0 - params.eps),
             params.alpha, std::acos(1.0 - params.eps));

  const HardInstance instance = build_instance(params, cfg.quad.grid_points);

  bool disjoint = true;
  try {
    instance.verify();
  } catch (const std::exception&) {
    disjoint = false;
  }
  result.add("invariants_verified_exactly", disjoint, disjoint ? 1.0 : 0.0, 1.0);

  bool decreasing = true;
  for (int i = 2; i <= instance.n(); ++i) {
    decreasing = decreasing && instance.theta(i) < instance.theta(i - 1) &&
                 instance.alpha(i) < instance.alpha(i - 1);
  }
  result.add("theta_alpha_strictly_decreasing", decreasing, decreasing ? 1.0 : 0.0, 1.0);

  // every body is within eps of the ball: D_inf(B, K_i) = 1 - cos(theta_1)
  const double dinf = 1.0 - std::cos(instance.theta(1));
  result.add("dinf_to_ball_leq_eps", dinf <= params.eps, dinf, params.eps);

  std::filesystem::create_directories(cfg.out_dir);
  save_instance(instance, cfg.instance_file());
  merge_summary(cfg, result);
  return result;
}

CommandResult cmd_divergence(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "divergence";
  const HardInstance instance = load_for(cfg);
  const InstanceParams& params = instance.params();
  const DerivedConstants dc = DerivedConstants::compute(params.d, params.p, cfg.quad.grid_points);

  QuadratureSpec probe_quad = cfg.quad;
  probe_quad.mc_samples = cfg.probe_samples;
  const auto partial = competitiveness_probe(ProbeSelector::kPartial, instance, instance.n(), probe_quad);
  const auto steiner_probe =
      competitiveness_probe(ProbeSelector::kSteiner, instance, instance.n(), probe_quad);

  const double q = schedule_exponent(params.d, params.p);
  const double coeff = 2.0 * std::pow(dc.f4, 1.0 / params.p) * std::pow(params.alpha, q);

  std::vector<std::vector<double>> rows;
  std::vector<double> s_values;
  for (std::size_t k = 0; k < partial.size(); ++k) {
    const int n = partial[k].n;
    const double s_n = instance.alpha_partial_sum(n);
    s_values.push_back(s_n);
    rows.push_back({static_cast<double>(n), s_n, partial[k].movement, steiner_probe[k].movement});

    result.add("S_N_geq_harmonic_bound_N_" + std::to_string(n), s_n >= coeff * harmonic(n), s_n,
               coeff * harmonic(n));
    result.add("M_partial_geq_eta_S_N_minus_1_N_" + std::to_string(n),
               partial[k].movement >= instance.eta() * instance.alpha_partial_sum(n - 1),
               partial[k].movement, instance.eta() * instance.alpha_partial_sum(n - 1));
    result.add("M_steiner_leq_d_N_" + std::to_string(n),
               steiner_probe[k].movement <= static_cast<double>(params.d),
               steiner_probe[k].movement, static_cast<double>(params.d));
  }
  const double decade_floor = 0.5 * coeff * std::log(10.0);
  for (std::size_t k = 0; k + 1 < s_values.size(); ++k) {
    const double growth = s_values[k + 1] - s_values[k];
    result.add("S_decade_growth_from_N_" + std::to_string(partial[k].n), growth >= decade_floor,
               growth, decade_floor);
  }

  write_csv(cfg.out_dir / "divergence.csv", "N,S_N,M_partial,M_steiner", rows);
  merge_summary(cfg, result);
  return result;
}

CommandResult cmd_lipschitz_audit(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "lipschitz-audit";
  const HardInstance instance = load_for(cfg);
  const InstanceParams& params = instance.params();
  const double lipschitz = 5.0 * params.d + params.eps;

  std::vector<std::vector<double>> rows;
  auto engine = make_stream(cfg.quad.seed, stream::kCorpus);
  std::uniform_int_distribution<int> index_dist(1, instance.n());

  // Exact path: instance pairs (K_i, K_j). Both the selector values and the
  // instance metric are closed-form, so these checks carry zero slack.
  const int exact_pairs = std::min(200, cfg.corpus_pairs);
  double max_exact_ratio = 0.0;
  for (int pair = 0; pair < exact_pairs; ++pair) {
    int i = index_dist(engine), j = index_dist(engine);
    if (i == j) j = (j % instance.n()) + 1;
    const Point si = partial_selector(instance, i);
    const Point sj = partial_selector(instance, j);
    const double dist = instance.exact_distance(i, j);
    const double ratio = distance(si, sj) / dist;
    max_exact_ratio = std::max(max_exact_ratio, ratio);
    rows.push_back({static_cast<double>(rows.size()), 0.0, dist, distance(si, sj), ratio, 0.0});
  }
  result.add("instance_pairs_ratio_leq_2eta", max_exact_ratio <= 2.0 * instance.eta(),
             max_exact_ratio, 2.0 * instance.eta());

  // Monte Carlo path: random balls and cap-cut balls, plus small-index
  // instance bodies against perturbed copies of themselves.
  const int mc_pairs = std::max(0, cfg.corpus_pairs - exact_pairs);
  auto corpus = random_bodies(params.d, 2 * mc_pairs, cfg.quad.seed + 1, false);

  auto evaluate = [&](const ConvexBody& body) {
    return full_selector(instance, body, cfg.quad);
  };

  double max_mc_adjusted_ratio = 0.0;
  bool mc_ok = true;
  for (int pair = 0; pair < mc_pairs; ++pair) {
    const ConvexBody* P;
    const ConvexBody* Q;
    std::unique_ptr<ConvexBody> holder_p, holder_q;
    if (pair % 5 == 4) {
      // K_i against a mild perturbation sharing its cut structure
      const int i = 2 + pair % 20;
      holder_p = std::make_unique<CapCutBall>(instance.body(i));
      std::vector<SlabCut> cuts = instance.body(i).cuts();
      cuts.back().angle *= 0.9;
      holder_q = std::make_unique<CapCutBall>(CapCutBall::certified(params.d, std::move(cuts)));
      P = holder_p.get();
      Q = holder_q.get();
    } else {
      P = corpus[static_cast<std::size_t>(2 * pair)].get();
      Q = corpus[static_cast<std::size_t>(2 * pair + 1)].get();
    }
    const SelectorOutput sp = evaluate(*P);
    const SelectorOutput sq = evaluate(*Q);
    const DistanceEstimate dist = dist_p(*P, *Q, params.p, cfg.quad);
    if (dist.value == 0.0) continue;
    const double delta = distance(sp.point, sq.point);
    const double slack = std::hypot(sp.steiner_std_error, sq.steiner_std_error) +
                         lipschitz * dist.std_error;
    const bool ok = delta <= lipschitz * dist.value + 5.0 * slack;
    mc_ok = mc_ok && ok;
    const double adjusted = std::max(0.0, delta - 5.0 * slack) / dist.value;
    max_mc_adjusted_ratio = std::max(max_mc_adjusted_ratio, adjusted);
    rows.push_back({static_cast<double>(rows.size()), 1.0, dist.value, delta, delta / dist.value,
                    slack});
  }
  result.add("corpus_max_ratio_leq_5d_plus_eps", mc_ok && max_mc_adjusted_ratio <= lipschitz,
             max_mc_adjusted_ratio, lipschitz);
  result.add("corpus_pairs_audited",
             static_cast<int>(rows.size()) >= std::min(cfg.corpus_pairs, exact_pairs + mc_pairs),
             static_cast<double>(rows.size()), static_cast<double>(cfg.corpus_pairs));

  write_csv(cfg.out_dir / "lipschitz_audit.csv", "pair_id,kind,D_p,delta_s,ratio,slack", rows);
  merge_summary(cfg, result);
  return result;
}

CommandResult cmd_no_extension_curve(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "no-extension-curve";
  const InstanceParams& params = cfg.params;
  if (!(params.d > 2.0 * params.p + 2.0)) {
    throw std::invalid_argument("no-extension-curve: requires d > 2p + 2");
  }
  const DerivedConstants dc = DerivedConstants::compute(params.d, params.p, cfg.quad.grid_points);

  std::vector<std::vector<double>> rows;
  std::vector<double> log_theta, log_ratio, ratios;
  for (int k = 1; k <= 12; ++k) {
    const double theta = std::pow(2.0, -k);
    const double numerator = 1.0 - std::cos(theta);
    const double dp = dp_ball_minus_cap(theta, params.d, params.p, cfg.quad.grid_points);
    const double ratio = numerator / dp;
    rows.push_back({theta, numerator, dp, ratio});
    log_theta.push_back(std::log(theta));
    log_ratio.push_back(std::log(ratio));
    ratios.push_back(ratio);

    result.add("numerator_taylor_bound_k_" + std::to_string(k), numerator >= 0.4 * theta * theta,
               numerator, 0.4 * theta * theta);
  }
  bool monotone = true;
  for (std::size_t k = 0; k + 1 < ratios.size(); ++k) monotone = monotone && ratios[k + 1] > ratios[k];
  result.add("ratio_strictly_increases_as_theta_halves", monotone, monotone ? 1.0 : 0.0, 1.0);

  // ordinary least squares slope of log(ratio) on log(theta)
  const double n = static_cast<double>(log_theta.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < log_theta.size(); ++k) {
    sx += log_theta[k];
    sy += log_ratio[k];
    sxx += log_theta[k] * log_theta[k];
    sxy += log_theta[k] * log_ratio[k];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  result.add("loglog_slope_matches_minus_dm1_over_p",
             std::abs(slope - dc.no_extension_slope) <= 0.05, slope, dc.no_extension_slope, 0.05);

  write_csv(cfg.out_dir / "no_extension_curve.csv", "theta,one_minus_cos,D_p,ratio", rows);
  merge_summary(cfg, result);
  return result;
}

CommandResult cmd_dp_lower_bound(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "dp-lower-bound";
  const InstanceParams& params = cfg.params;
  const DerivedConstants dc = DerivedConstants::compute(params.d, params.p, cfg.quad.grid_points);
  const double q = schedule_exponent(params.d, params.p);

  const double lo = std::log(1e-3), hi = std::log(kHalfPi);
  std::vector<std::vector<double>> rows;
  bool derived_ok = true, published_ok = true;
  for (int k = 0; k < 50; ++k) {
    const double theta = std::exp(lo + (hi - lo) * k / 49.0);
    const double exact = dp_ball_minus_cap(theta, params.d, params.p, cfg.quad.grid_points);
    const double bound = std::pow(dc.f4, 1.0 / params.p) * std::pow(theta, q);
    const double bound_pub = std::pow(dc.f4_published, 1.0 / params.p) * std::pow(theta, q);
    derived_ok = derived_ok && exact >= bound;
    published_ok = published_ok && exact >= bound_pub;
    rows.push_back({theta, exact, bound, bound_pub});
  }
  result.add("exact_dp_geq_derived_bound_all_grid", derived_ok, derived_ok ? 1.0 : 0.0, 1.0);
  result.add("exact_dp_geq_published_bound_all_grid", published_ok, published_ok ? 1.0 : 0.0, 1.0);

  write_csv(cfg.out_dir / "dp_lower_bound.csv", "theta,exact_dp,bound,bound_published", rows);
  merge_summary(cfg, result);
  return result;
}

CommandResult cmd_steiner_d1(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "steiner-d1";
  const int d = cfg.params.d;
  const int m = cfg.probe_samples;
  auto corpus = random_bodies(d, 2 * cfg.steiner_pairs, cfg.quad.seed + 2, true);

  std::vector<std::vector<double>> rows;
  bool all_ok = true;
  for (int pair = 0; pair < cfg.steiner_pairs; ++pair) {
    const ConvexBody& A = *corpus[static_cast<std::size_t>(2 * pair)];
    const ConvexBody& B = *corpus[static_cast<std::size_t>(2 * pair + 1)];
    // common random numbers: one direction sample for st(A), st(B), and D_1
    auto engine = make_stream(cfg.quad.seed + static_cast<std::uint64_t>(pair), stream::kSteiner);
    Point sum_a = zeros(d), sum_b = zeros(d), sq_a = zeros(d), sq_b = zeros(d);
    double sum_gap = 0.0;
    for (int s = 0; s < m; ++s) {
      const UnitVector y = sample_direction(d, engine);
      const double ha = A.support(y), hb = B.support(y);
      sum_gap += std::abs(ha - hb);
      for (int k = 0; k < d; ++k) {
        const double xa = d * y[k] * ha, xb = d * y[k] * hb;
        sum_a[static_cast<std::size_t>(k)] += xa;
        sq_a[static_cast<std::size_t>(k)] += xa * xa;
        sum_b[static_cast<std::size_t>(k)] += xb;
        sq_b[static_cast<std::size_t>(k)] += xb * xb;
      }
    }
    const double d1 = sum_gap / m;
    double delta2 = 0.0, pooled2 = 0.0;
    for (int k = 0; k < d; ++k) {
      const double ma = sum_a[static_cast<std::size_t>(k)] / m;
      const double mb = sum_b[static_cast<std::size_t>(k)] / m;
      delta2 += (ma - mb) * (ma - mb);
      pooled2 += std::max(0.0, (sq_a[static_cast<std::size_t>(k)] - m * ma * ma) / (m - 1)) / m;
      pooled2 += std::max(0.0, (sq_b[static_cast<std::size_t>(k)] - m * mb * mb) / (m - 1)) / m;
    }
    const double delta = std::sqrt(delta2);
    const double pooled = std::sqrt(pooled2);
    const bool ok = delta <= d * d1 + 3.0 * pooled;
    all_ok = all_ok && ok;
    rows.push_back({static_cast<double>(pair), d1, delta, d1 > 0 ? delta / d1 : 0.0, pooled});
  }
  result.add("delta_st_leq_d_times_D1_plus_3se", all_ok, all_ok ? 1.0 : 0.0, 1.0);
  result.add("pairs_audited", static_cast<int>(rows.size()) == cfg.steiner_pairs,
             static_cast<double>(rows.size()), static_cast<double>(cfg.steiner_pairs));

  write_csv(cfg.out_dir / "steiner_d1.csv", "pair_id,D_1,delta_st,ratio,pooled_se", rows);
  merge_summary(cfg, result);
  return result;
}

CommandResult cmd_contains_ball(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "contains-ball";
  const int d = cfg.params.d;
  auto engine = make_stream(cfg.quad.seed + 3, stream::kCorpus);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> cut_count(1, 3);

  // corpus of K ⊆ B with 0 ∈ K
  std::vector<std::unique_ptr<ConvexBody>> bodies;
  bodies.push_back(std::make_unique<Ball>(Ball::unit(d)));
  while (static_cast<int>(bodies.size()) < cfg.contain_bodies) {
    if (bodies.size() % 2 == 1) {
      const double r = 0.4 + 0.55 * unif(engine);
      const double c = unif(engine) * std::min(r, 1.0 - r);
      const Point center = c * sample_direction(d, engine).coords();
      bodies.push_back(std::make_unique<Ball>(center, r));
    } else {
      bodies.push_back(
          std::make_unique<CapCutBall>(d, random_disjoint_cuts(d, cut_count(engine), engine)));
    }
  }

  QuadratureSpec quad = cfg.quad;
  quad.mc_samples = std::max(quad.mc_samples, 100000);
  std::vector<std::vector<double>> rows;
  bool all_ok = true;
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    const ConvexBody& body = *bodies[b];
    const double bound = inscribed_ball_radius_bound(body, quad);
    auto dir_engine = make_stream(quad.seed + b, stream::kNestCheck);
    double min_support = std::numeric_limits<double>::infinity();
    for (int s = 0; s < quad.mc_samples; ++s) {
      min_support = std::min(min_support, body.support(sample_direction(d, dir_engine)));
    }
    const bool ok = min_support >= bound - 1e-9;
    all_ok = all_ok && ok;
    rows.push_back({static_cast<double>(b), bound, min_support, ok ? 1.0 : 0.0});
  }
  result.add("min_support_geq_1_minus_dinf", all_ok, all_ok ? 1.0 : 0.0, 1.0, 1e-9);

  write_csv(cfg.out_dir / "contains_ball.csv", "body_id,radius_bound,min_support,pass", rows);
  merge_summary(cfg, result);
  return result;
}

CommandResult cmd_footnote_demo(const ExperimentConfig& cfg) {
  CommandResult result;
  result.command = "footnote-demo";
  const int d = cfg.params.d;

  // two triangle edges sharing a vertex, all inside the unit ball
  const Point shared = axis_point(d, 0, 0.2);
  Point v1 = axis_point(d, 0, 0.2);
  v1[1] = 0.6;
  const Point v2 = axis_point(d, 0, -0.4);
  const PointHull edge_a({shared, v1});
  const PointHull edge_b({shared, v2});

  QuadratureSpec quad = cfg.quad;
  quad.mc_samples = cfg.probe_samples;
  Selector select = [&](const ConvexBody& K) { return steiner(K, quad).point; };

  const int t_long = cfg.demo_steps;
  const int t_short = std::max(1, cfg.demo_steps / 10);
  const RunReport run_long = alternating_demo(edge_a, edge_b, t_long, select, shared);
  const RunReport run_short = alternating_demo(edge_a, edge_b, t_short, select, shared);

  result.add("movement_grows_9x_per_decade",
             run_long.trajectory.total >= 9.0 * run_short.trajectory.total,
             run_long.trajectory.total, 9.0 * run_short.trajectory.total);
  result.add("opt_constant_across_horizons", run_long.opt_cost == run_short.opt_cost,
             run_long.opt_cost, run_short.opt_cost);
  double min_step = std::numeric_limits<double>::infinity(), max_step = 0.0;
  for (std::size_t t = 1; t < run_long.trajectory.step_costs.size(); ++t) {
    min_step = std::min(min_step, run_long.trajectory.step_costs[t]);
    max_step = std::max(max_step, run_long.trajectory.step_costs[t]);
  }
  result.add("memoryless_steps_identical", max_step - min_step <= 1e-12, max_step - min_step,
             0.0, 1e-12);

  std::filesystem::create_directories(cfg.out_dir);
  ordered_json report{{"steps_long", t_long},
                      {"steps_short", t_short},
                      {"run_long", run_long.to_json()},
                      {"run_short", run_short.to_json()}};
  write_text_atomic(cfg.out_dir / "footnote_demo.json", report.dump(2) + "\n");
  merge_summary(cfg, result);
  return result;
}

}  // namespace cbc
