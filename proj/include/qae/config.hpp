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

#include <cstdint>
#include <string>
#include <vector>

#include "qae/train.hpp"

// Line-oriented `key = value` run configuration. Unknown keys are errors;
// missing keys take the documented defaults (the paper-caption values).

namespace qae {

struct RunConfig {
  std::string arch_name = "qae_nisq";
  int m = 2;
  int model = 0;  // required (1..3) iff arch_name == qae_conj_mod_dec
  double p_train = 0.2;
  double p_val_max = 0.2;
  int n_train = 30;
  int n_val = 30;
  double learning_rate = 0.4;
  int iterations = 100;
  GradMethod grad_method = GradMethod::param_shift;
  double fd_step = 1e-5;
  InitKind init = InitKind::uniform;
  int warm_steps = -1;
  double warm_sigma = 0.1;
  int transfer_iterations = 50;
  std::uint64_t seed = 42;
  std::string out_dir = "out";
};

struct SweepConfig {
  RunConfig base;
  std::vector<double> p_values;  // defaults to 0, 0.05, ..., 0.5
  int iterations_at_eval = 50;
};

/// Validates cross-field constraints (model presence, ranges). Throws
/// std::runtime_error with a descriptive message.
void validate_config(const RunConfig& config);

RunConfig parse_config(const std::string& path);
SweepConfig parse_sweep_config(const std::string& path);

/// Config rendered back as key = value lines; parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& config);

std::vector<double> default_sweep_grid();

}  // namespace qae
