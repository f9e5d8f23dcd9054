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

#include "qae/network.hpp"
#include "qae/noise.hpp"

// Per-iteration evaluation: training cost against noisy references,
// clean-GHZ fidelities, and second-order Renyi entropies of the hidden
// qubit and the output block.

namespace qae {

struct IterationRecord {
  int iter = 0;
  double cost_train = 0.0;       // mean fidelity vs the pairs' noisy references
  double fid_train_clean = 0.0;  // mean output fidelity vs the clean GHZ
  double fid_val = 0.0;          // mean validation fidelity vs the clean GHZ
  double renyi_hidden = 0.0;     // nats
  double renyi_output = 0.0;     // nats
};

/// Second-order Renyi entropy -ln(Tr rho^2), small negatives clamped to 0.
double renyi2(const DensityMatrix& rho);

struct SubsystemEntropies {
  double hidden = 0.0;
  double output = 0.0;
};

/// Renyi entropies of the reduced hidden qubit and the reduced output block,
/// computed on the pre-trace final state.
SubsystemEntropies subsystem_entropies(const ArchitectureSpec& arch,
                                       const ParamVector& params,
                                       const DensityMatrix& input);

/// One record: cost_train per the noisy-reference cost, everything else
/// averaged over the training (clean fidelity, entropies) or validation
/// (fid_val) inputs.
IterationRecord evaluate_metrics(const ArchitectureSpec& arch,
                                 const ParamVector& params,
                                 const DataSet& train_set,
                                 const DataSet& val_set, int iter);

}  // namespace qae
