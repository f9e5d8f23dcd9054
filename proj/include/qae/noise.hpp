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

#include "qae/qmath.hpp"
#include "qae/rng.hpp"

// GHZ preparation, bit-flip training-data sampling, the per-qubit
// depolarizing validation channel, and dataset assembly.

namespace qae {

enum class NoiseKind { bitflip, depolarizing };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::bitflip;
  double p = 0.0;  // flip probability, or the per-qubit probability bound
  std::uint64_t seed = 0;
};

struct DataPair {
  DensityMatrix input;   // m-qubit mixed or pure state
  PureState reference;   // m-qubit pure reference
};

struct DataSet {
  std::vector<DataPair> pairs;
  int m = 0;
  NoiseSpec spec;
};

/// (|0...0> + |1...1>)/sqrt(2) on m qubits.
PureState ghz(int m);

/// GHZ with each qubit independently flipped with probability p. The result
/// is always (|s> + |~s>)/sqrt(2) for the sampled flip pattern s.
PureState sample_bitflip_ghz(int m, double p, Rng& rng);

/// Per-qubit depolarizing channel, qubits in ascending order:
/// D_p(rho) = (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z).
DensityMatrix depolarize(const DensityMatrix& rho, const std::vector<double>& probs);

/// N pairs of independently sampled bit-flip GHZ states; the reference of
/// each pair is itself a fresh noisy sample, never the clean GHZ.
DataSet make_training_set(int m, double p, int n, Rng& rng);

/// Depolarized GHZ inputs with per-qubit probabilities drawn i.i.d.
/// Uniform[0, p_max] per sample; the reference is the clean GHZ.
DataSet make_validation_set(int m, double p_max, int n_v, Rng& rng);

/// Human-readable convention string recorded in run metadata.
std::string depolarizing_convention();

}  // namespace qae
