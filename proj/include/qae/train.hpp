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

#include "qae/metrics.hpp"
#include "qae/network.hpp"
#include "qae/noise.hpp"
#include "qae/rng.hpp"

// Fidelity cost, gradients (per-occurrence parameter shift and central
// finite differences), SGD ascent, and the two training strategies.
//
// Gradient direction: the cost is the fidelity and training maximizes it,
// so sgd_step moves parameters along +lr * gradient.

namespace qae {

enum class Strategy { average, per_sample };
enum class GradMethod { param_shift, finite_diff };

// transfer: briefly trains a plain (untied) autoencoder of the same width on
// the same data and seeds the tied slots from its encoder block. With tied
// parameters a good encoder implies a matching decoder, which makes this the
// reliable initialization for the deeper (3-1-3) conjugate networks.
enum class InitKind { uniform, warm_start, transfer };

struct TrainConfig {
  Strategy strategy = Strategy::average;
  double learning_rate = 0.4;
  int iterations = 100;
  GradMethod grad_method = GradMethod::param_shift;
  double fd_step = 1e-5;
  InitKind init = InitKind::uniform;
  int warm_steps = -1;     // per-sample steps before perturbation; -1 = one pass
  double warm_sigma = 0.1; // stddev of the warm-start perturbation
  int transfer_iterations = 50;  // teacher SGD steps for init = transfer
  std::uint64_t seed = 42; // drives init and warm-start draws
};

struct TrainHistory {
  std::vector<IterationRecord> records;  // iterations + 1 entries (pre-training first)
  ParamVector final_params;
};

/// Fidelity of the channel output against the pair's reference, Eq-style:
/// <ref| forward(input) |ref>.
double fidelity_cost(const ArchitectureSpec& arch, const ParamVector& params,
                     const DataPair& pair);

/// Mean fidelity_cost over the dataset.
double average_cost(const ArchitectureSpec& arch, const ParamVector& params,
                    const DataSet& data);

/// Parameter-shift gradient of average_cost. Each slot sums per-occurrence
/// shift terms: singles use 1/2 [f(+pi/2) - f(-pi/2)], two-qubit gates use
/// f(+pi/4) - f(-pi/4), each applied to that occurrence's realized angle
/// with the instance sign as chain-rule factor. Tied occurrences add.
ParamVector grad_param_shift(const ArchitectureSpec& arch, const ParamVector& params,
                             const DataSet& data);

/// Central finite differences on average_cost, shifting each slot as a whole
/// (all occurrences simultaneously); the independent oracle for the above.
ParamVector grad_finite_diff(const ArchitectureSpec& arch, const ParamVector& params,
                             const DataSet& data, double h);

/// Gradient by the method selected in the config.
ParamVector gradient(const ArchitectureSpec& arch, const ParamVector& params,
                     const DataSet& data, const TrainConfig& config);

/// Ascent step params + lr * grad.
ParamVector sgd_step(const ParamVector& params, const ParamVector& grad, double lr);

/// i.i.d. Uniform[-pi, pi) draw per slot.
ParamVector random_params(int n_slots, Rng& rng);

/// Initial parameters per config: a uniform draw, or the warm start.
ParamVector init_params(const ArchitectureSpec& arch, const TrainConfig& config,
                        const DataSet& train_set);

/// Full-batch ascent for config.iterations steps; metrics recorded before
/// training and after every step.
TrainHistory train_average(const ArchitectureSpec& arch, const TrainConfig& config,
                           const DataSet& train_set, const DataSet& val_set);

/// One ascent step per pair, in dataset order, from a uniform random start.
ParamVector train_per_sample(const ArchitectureSpec& arch, const TrainConfig& config,
                             const DataSet& train_set);

/// Per-sample steps (config.warm_steps, cycling through the set) followed by
/// an i.i.d. Gaussian(0, warm_sigma^2) perturbation of every slot.
ParamVector warm_start(const ArchitectureSpec& arch, const TrainConfig& config,
                       const DataSet& train_set, Rng& rng);

/// Trains a plain autoencoder of the same m on the training set for
/// config.transfer_iterations full-batch steps (warm-started from rng) and
/// returns its encoder block as the initialization of a tied architecture.
/// Only valid for architectures with 6m slots.
ParamVector transfer_start(const ArchitectureSpec& arch, const TrainConfig& config,
                           const DataSet& train_set, Rng& rng);

struct ParamsFile {
  std::string name;
  int m = 0;
  int model = 0;
  int n_slots = 0;
  ParamVector values;
};

/// Text format: header "name m model n_slots", then one angle per line at
/// full double precision.
void save_params(const std::string& path, const ArchitectureSpec& arch,
                 const ParamVector& params);
ParamsFile load_params(const std::string& path);

}  // namespace qae
