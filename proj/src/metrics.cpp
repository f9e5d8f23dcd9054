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

#include "qae/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace qae {

double renyi2(const DensityMatrix& rho) {
  double e = -std::log(purity(rho));
  if (e < 0.0 && e > -1e-9) e = 0.0;
  return e;
}

SubsystemEntropies subsystem_entropies(const ArchitectureSpec& arch,
                                       const ParamVector& params,
                                       const DensityMatrix& input) {
  const DensityMatrix full = final_state(arch, params, input);
  const DensityMatrix hidden =
      partial_trace(full, std::vector<int>{arch.layout.hidden()});
  const DensityMatrix output = partial_trace(full, arch.layout.output_qubits());
  return SubsystemEntropies{renyi2(hidden), renyi2(output)};
}

IterationRecord evaluate_metrics(const ArchitectureSpec& arch,
                                 const ParamVector& params,
                                 const DataSet& train_set,
                                 const DataSet& val_set, int iter) {
  if (train_set.pairs.empty() || val_set.pairs.empty()) {
    throw std::invalid_argument("evaluate_metrics: empty dataset");
  }
  const PureState clean = ghz(arch.layout.m);

  IterationRecord rec;
  rec.iter = iter;
  for (const DataPair& pair : train_set.pairs) {
    // One final-state evolution per input feeds every training-side metric.
    const DensityMatrix full = final_state(arch, params, pair.input);
    const DensityMatrix out = partial_trace(full, arch.layout.output_qubits());
    rec.cost_train += fidelity_pure(out, pair.reference);
    rec.fid_train_clean += fidelity_pure(out, clean);
    rec.renyi_hidden +=
        renyi2(partial_trace(full, std::vector<int>{arch.layout.hidden()}));
    rec.renyi_output += renyi2(out);
  }
  const double n_train = static_cast<double>(train_set.pairs.size());
  rec.cost_train /= n_train;
  rec.fid_train_clean /= n_train;
  rec.renyi_hidden /= n_train;
  rec.renyi_output /= n_train;

  for (const DataPair& pair : val_set.pairs) {
    rec.fid_val += fidelity_pure(forward(arch, params, pair.input), clean);
  }
  rec.fid_val /= static_cast<double>(val_set.pairs.size());
  return rec;
}

}  // namespace qae
