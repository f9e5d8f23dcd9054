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

#include <vector>

#include "qae/qmath.hpp"

// Parametrized gate matrices and register embedding.
//
// Single-qubit gates use the ZYZ Euler form U = Rz(gamma) Ry(beta) Rz(alpha)
// with half-angle convention Rz(phi) = exp(-i phi Z/2), Ry(t) = exp(-i t Y/2).
// Two-qubit gates are R_XX(tx) R_YY(ty) R_ZZ(tz) with R_AA(t) = exp(+i t A(x)A);
// the three factors commute, so the order only fixes a canonical form.

namespace qae {

struct SingleQubitAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct TwoQubitAngles {
  double theta_x = 0.0;
  double theta_y = 0.0;
  double theta_z = 0.0;
};

const CMat& pauli_x();
const CMat& pauli_y();
const CMat& pauli_z();
const CMat& identity2();

/// 2x2 unitary Rz(gamma) Ry(beta) Rz(alpha).
CMat single_qubit_matrix(const SingleQubitAngles& a);

/// 4x4 unitary R_XX(tx) R_YY(ty) R_ZZ(tz).
CMat two_qubit_matrix(const TwoQubitAngles& t);

/// Angles whose matrix is the conjugate transpose of the input's matrix.
SingleQubitAngles dagger_angles(const SingleQubitAngles& a);
TwoQubitAngles dagger_angles(const TwoQubitAngles& t);

/// Index arithmetic for a gate on `targets` inside an n_total-qubit register:
/// a full index decomposes as bases[rest] + offsets[target pattern].
struct EmbedPlan {
  Eigen::Index d = 0;                 // 2^(number of targets)
  std::vector<Eigen::Index> offsets;  // full-index offset per target pattern
  std::vector<Eigen::Index> bases;    // full indices with all target bits zero
};

EmbedPlan make_embed_plan(const std::vector<int>& targets, int n_total);

/// Full-register operator acting as `op` on `targets` (in the given order,
/// first target = most significant op qubit) and as identity elsewhere.
CMat embed(const CMat& op, const std::vector<int>& targets, int n_total);

/// In-place mat <- E mat, with E = embed(op, targets, n_total).
void apply_embedded_left(CMat& mat, const CMat& op,
                         const std::vector<int>& targets, int n_total);

/// In-place mat <- mat E^dagger.
void apply_embedded_right_dagger(CMat& mat, const CMat& op,
                                 const std::vector<int>& targets, int n_total);

/// In-place mat <- E mat E^dagger (conjugation by the embedded gate).
void conjugate_embedded(CMat& mat, const CMat& op,
                        const std::vector<int>& targets, int n_total);

}  // namespace qae
