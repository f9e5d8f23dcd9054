// Copyright 2026 The qae-denoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qae/config.hpp"
#include "qae/io.hpp"

// Experiment execution: dataset/seed wiring, CSV + params + meta emission,
// named presets, and the gradient self-check.
//
// Seed derivation from a run's master seed: training set = derive_seed(seed, 1),
// validation set = derive_seed(seed, 2), init/warm-start = derive_seed(seed, 3).
// Sweep point i runs with derive_seed(seed, 1000 + i); preset curve j with
// derive_seed(seed, 1 + j).

namespace qae {

struct RunData {
  ArchitectureSpec arch;
  DataSet train_set;
  DataSet val_set;
  TrainConfig train_config;
};

/// Architecture, datasets and training config implied by a run config.
RunData prepare_run(const RunConfig& config);

/// Stable file-name stem, e.g. "qae_conj_mod_dec_m3_model3_p0.2".
std::string run_label(const RunConfig& config);

struct RunResult {
  RunConfig config;
  TrainHistory history;
  std::string csv_path;
  std::string params_path;
  std::string meta_path;
};

/// Trains per the config and writes <label>.csv, <label>.params and
/// <label>.meta under config.out_dir.
RunResult cmd_train(const RunConfig& config);

struct SweepResult {
  std::vector<SweepRow> rows;
  std::string csv_path;
  std::string meta_path;
};

/// One training per p value (fresh datasets and init from a derived seed;
/// p_train = p_val_max = p), final metrics per row.
SweepResult cmd_sweep(const SweepConfig& sweep);

struct PresetRun {
  std::string kind;  // "train" or "sweep"
  RunConfig config;
  int sweep_iterations = 0;  // for kind == "sweep"
};

std::vector<std::string> preset_names();

/// The runs a preset would execute, with seeds/outputs resolved.
std::vector<PresetRun> preset_plan(const std::string& name, std::uint64_t seed,
                                   const std::string& out_dir);

/// Executes a named experiment: every run's files plus a combined SVG chart.
/// Returns the paths written.
std::vector<std::string> cmd_preset(const std::string& name,
                                    std::optional<std::uint64_t> seed,
                                    std::optional<std::string> out_dir);

struct GradCheckReport {
  double max_abs_err = 0.0;
  double tolerance = 1e-6;
  int points = 0;
  bool pass = false;
  std::vector<double> per_slot_max;  // max |shift - fd| per slot over all points
};

/// Compares parameter-shift and finite-difference gradients at random points
/// on a small dataset drawn from the config's noise settings.
GradCheckReport cmd_gradient_check(const RunConfig& config, int points);

}  // namespace qae
