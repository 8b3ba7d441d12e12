// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: each subcommand runs one experiment, writes its
// artifacts under --out, and exits nonzero if any of its checks fail.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cbc/experiments.hpp"

namespace {

void print_result(const cbc::CommandResult& result) {
  for (const cbc::Check& c : result.checks) {
    std::printf("  [%s] %-48s value=%.10g bound=%.10g\n", c.passed ? "PASS" : "FAIL",
                c.name.c_str(), c.value, c.bound);
  }
  std::printf("%s: %s\n", result.command.c_str(), result.passed ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for Lipschitz selections of nested convex bodies"};
  app.require_subcommand(1);
  app.fallthrough();

  cbc::ExperimentConfig cfg;
  std::string config_path;
  std::string out_dir = "out";
  std::string instance_path;

  app.add_option("--config", config_path, "JSON config file; explicit flags override it");
  app.add_option("--p", cfg.params.p, "metric exponent p > 1");
  app.add_option("--d", cfg.params.d, "ambient dimension");
  app.add_option("--eps", cfg.params.eps, "instance scale eps in (0,1)");
  app.add_option("--alpha", cfg.params.alpha, "schedule scale (0 = calibrate)");
  app.add_option("--n-caps", cfg.params.n_caps, "number of removed caps");
  app.add_option("--seed", cfg.params.seed, "root RNG seed");
  app.add_option("--samples", cfg.quad.mc_samples, "Monte Carlo sample count");
  app.add_option("--grid", cfg.quad.grid_points, "1-D quadrature grid points");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--instance", instance_path, "instance JSON path (default <out>/instance.json)");
  app.add_option("--corpus-pairs", cfg.corpus_pairs, "Lipschitz audit pair count");
  app.add_option("--steiner-pairs", cfg.steiner_pairs, "Steiner/D_1 audit pair count");
  app.add_option("--contain-bodies", cfg.contain_bodies, "containment audit corpus size");
  app.add_option("--probe-samples", cfg.probe_samples, "samples for trajectory probes");
  app.add_option("--demo-steps", cfg.demo_steps, "alternating demo horizon");

  using Command = std::function<cbc::CommandResult(const cbc::ExperimentConfig&)>;
  const std::map<std::string, Command> commands = {
      {"build-instance", cbc::cmd_build_instance},
      {"divergence", cbc::cmd_divergence},
      {"lipschitz-audit", cbc::cmd_lipschitz_audit},
      {"no-extension-curve", cbc::cmd_no_extension_curve},
      {"dp-lower-bound", cbc::cmd_dp_lower_bound},
      {"steiner-d1", cbc::cmd_steiner_d1},
      {"contains-ball", cbc::cmd_contains_ball},
      {"footnote-demo", cbc::cmd_footnote_demo},
  };

  app.add_subcommand("build-instance", "calibrate, pack, and save the nested hard instance");
  app.add_subcommand("divergence", "movement partial sums per decade vs. the harmonic bound");
  app.add_subcommand("lipschitz-audit", "selector displacement vs. D_p over a body corpus");
  app.add_subcommand("no-extension-curve", "Hausdorff/D_p ratio blow-up as cap angle shrinks");
  app.add_subcommand("dp-lower-bound", "exact single-cap D_p against the power-law bound");
  app.add_subcommand("steiner-d1", "Steiner displacement vs. d * D_1 over random pairs");
  app.add_subcommand("contains-ball", "inscribed-ball radius bound 1 - D_inf(K, B)");
  app.add_subcommand("footnote-demo", "alternating (non-nested) sequence with linear movement");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open config: " + config_path);
      cbc::ordered_json j;
      in >> j;
      const cbc::ExperimentConfig from_file = cbc::ExperimentConfig::from_json(j);
      // file first, then explicit flags on top
      cbc::ExperimentConfig merged = from_file;
      for (const CLI::Option* opt : app.get_options()) {
        if (opt->count() == 0) continue;
        const std::string name = opt->get_name();
        if (name == "--p") merged.params.p = cfg.params.p;
        else if (name == "--d") merged.params.d = cfg.params.d;
        else if (name == "--eps") merged.params.eps = cfg.params.eps;
        else if (name == "--alpha") merged.params.alpha = cfg.params.alpha;
        else if (name == "--n-caps") merged.params.n_caps = cfg.params.n_caps;
        else if (name == "--seed") { merged.params.seed = cfg.params.seed; merged.quad.seed = cfg.params.seed; }
        else if (name == "--samples") merged.quad.mc_samples = cfg.quad.mc_samples;
        else if (name == "--grid") merged.quad.grid_points = cfg.quad.grid_points;
        else if (name == "--corpus-pairs") merged.corpus_pairs = cfg.corpus_pairs;
        else if (name == "--steiner-pairs") merged.steiner_pairs = cfg.steiner_pairs;
        else if (name == "--contain-bodies") merged.contain_bodies = cfg.contain_bodies;
        else if (name == "--probe-samples") merged.probe_samples = cfg.probe_samples;
        else if (name == "--demo-steps") merged.demo_steps = cfg.demo_steps;
      }
      cfg = merged;
    } else {
      cfg.quad.seed = cfg.params.seed;
    }
    if (app.count("--out") > 0 || config_path.empty()) cfg.out_dir = out_dir;
    if (!instance_path.empty()) cfg.instance_path = instance_path;
    cfg.quad.validate();

    const std::string name = app.get_subcommands().front()->get_name();
    const cbc::CommandResult result = commands.at(name)(cfg);
    print_result(result);
    return result.passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
