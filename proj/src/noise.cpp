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

#include "qae/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "qae/gates.hpp"

namespace qae {

PureState ghz(int m) {
  if (m < 1) throw std::invalid_argument("ghz: m must be >= 1");
  CVec amps = CVec::Zero(dim_of(m));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps(0) = inv_sqrt2;
  amps(dim_of(m) - 1) = inv_sqrt2;
  return PureState{m, std::move(amps)};
}

PureState sample_bitflip_ghz(int m, double p, Rng& rng) {
  if (m < 1) throw std::invalid_argument("sample_bitflip_ghz: m must be >= 1");
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("sample_bitflip_ghz: p outside [0,1]");
  }
  // Qubit 0 is the MSB, so flipping qubit q toggles bit (m-1-q).
  Eigen::Index mask = 0;
  for (int q = 0; q < m; ++q) {
    if (rng.bernoulli(p)) mask |= Eigen::Index{1} << (m - 1 - q);
  }
  const Eigen::Index all = dim_of(m) - 1;
  CVec amps = CVec::Zero(dim_of(m));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps(mask) = inv_sqrt2;
  amps(all ^ mask) = inv_sqrt2;
  return PureState{m, std::move(amps)};
}

DensityMatrix depolarize(const DensityMatrix& rho, const std::vector<double>& probs) {
  if (static_cast<int>(probs.size()) != rho.n_qubits) {
    throw std::invalid_argument("depolarize: probs length != qubit count");
  }
  for (double p : probs) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("depolarize: probability outside [0,1]");
    }
  }
  DensityMatrix out = rho;
  const int n = rho.n_qubits;
  for (int q = 0; q < n; ++q) {
    const double p = probs[q];
    if (p == 0.0) continue;
    const std::vector<int> target{q};
    CMat mixed = CMat::Zero(out.mat.rows(), out.mat.cols());
    for (const CMat* pauli : {&pauli_x(), &pauli_y(), &pauli_z()}) {
      CMat term = out.mat;
      conjugate_embedded(term, *pauli, target, n);
      mixed += term;
    }
    out.mat = (1.0 - p) * out.mat + (p / 3.0) * mixed;
  }
  return out;
}

DataSet make_training_set(int m, double p, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("make_training_set: N must be >= 1");
  DataSet set;
  set.m = m;
  set.spec = NoiseSpec{NoiseKind::bitflip, p, 0};
  set.pairs.reserve(n);
  for (int i = 0; i < n; ++i) {
    PureState sample = sample_bitflip_ghz(m, p, rng);
    PureState reference = sample_bitflip_ghz(m, p, rng);
    set.pairs.push_back(DataPair{density_from_pure(sample), std::move(reference)});
  }
  return set;
}

DataSet make_validation_set(int m, double p_max, int n_v, Rng& rng) {
  if (n_v < 1) throw std::invalid_argument("make_validation_set: N must be >= 1");
  if (p_max < 0.0 || p_max > 1.0) {
    throw std::invalid_argument("make_validation_set: p_max outside [0,1]");
  }
  const PureState clean = ghz(m);
  const DensityMatrix clean_rho = density_from_pure(clean);
  DataSet set;
  set.m = m;
  set.spec = NoiseSpec{NoiseKind::depolarizing, p_max, 0};
  set.pairs.reserve(n_v);
  for (int i = 0; i < n_v; ++i) {
    std::vector<double> probs(m);
    for (int q = 0; q < m; ++q) probs[q] = rng.uniform(0.0, p_max);
    set.pairs.push_back(DataPair{depolarize(clean_rho, probs), clean});
  }
  return set;
}

std::string depolarizing_convention() {
  return "per-qubit D_p(rho) = (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z), "
         "qubits in ascending order";
}

}  // namespace qae
