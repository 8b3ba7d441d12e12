// Copyright (c) 2026 cbclab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cbc/chasing.hpp"
#include "cbc/constants.hpp"

namespace cbc {

struct ExperimentConfig {
  InstanceParams params;  // alpha == 0 means "calibrate"
  QuadratureSpec quad;
  std::filesystem::path out_dir = "out";
  std::filesystem::path instance_path;  // defaults to out_dir / "instance.json"

  int corpus_pairs = 500;    // lipschitz audit corpus size (>= 500)
  int steiner_pairs = 200;   // steiner D_1 audit pairs
  int contain_bodies = 50;   // inscribed-ball audit corpus size
  int probe_samples = 20000; // MC samples for the shared-sample Steiner probe
  int demo_steps = 100;      // footnote demo horizon

  std::filesystem::path instance_file() const {
    return instance_path.empty() ? out_dir / "instance.json" : instance_path;
  }
  static ExperimentConfig from_json(const ordered_json& j);
};

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
};

struct CommandResult {
  std::string command;
  bool passed = true;
  std::vector<Check> checks;

  void add(const std::string& name, bool ok, double value, double bound, double tol = 0.0);
  ordered_json summary() const;
};

// Each command writes its CSV artifact(s) into out_dir, merges its block
// into out_dir/summary.json (atomically), and reports per-check pass/fail.
CommandResult cmd_build_instance(const ExperimentConfig& cfg);
CommandResult cmd_divergence(const ExperimentConfig& cfg);
CommandResult cmd_lipschitz_audit(const ExperimentConfig& cfg);
CommandResult cmd_no_extension_curve(const ExperimentConfig& cfg);
CommandResult cmd_dp_lower_bound(const ExperimentConfig& cfg);
CommandResult cmd_steiner_d1(const ExperimentConfig& cfg);
CommandResult cmd_contains_ball(const ExperimentConfig& cfg);
CommandResult cmd_footnote_demo(const ExperimentConfig& cfg);

/// Atomic text write: temp file in the target directory, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// CSV with a fixed header row, written atomically.
void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

/// Random audit corpus: off-center balls, cap-cut balls with 1-3 disjoint
/// cuts, and (optionally) point hulls, all inside the unit ball.
std::vector<std::unique_ptr<ConvexBody>> random_bodies(int d, int count, std::uint64_t seed,
                                                       bool include_hulls);

}  // namespace cbc
