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

#include "qae/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qae {

namespace {

constexpr Complex kI{0.0, 1.0};

CMat rz(double phi) {
  CMat m(2, 2);
  m << std::exp(-kI * (phi / 2.0)), 0.0, 0.0, std::exp(kI * (phi / 2.0));
  return m;
}

CMat ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  CMat m(2, 2);
  m << c, -s, s, c;
  return m;
}

// exp(+i theta A(x)A) = cos(theta) I + i sin(theta) A(x)A, since (A(x)A)^2 = I.
CMat two_qubit_rotation(double theta, const CMat& pauli) {
  const CMat aa = kron(pauli, pauli);
  return std::cos(theta) * CMat::Identity(4, 4) + kI * std::sin(theta) * aa;
}

void check_op_dim(const CMat& op, const EmbedPlan& plan) {
  if (op.rows() != plan.d || op.cols() != plan.d) {
    throw std::invalid_argument("embed: operator dim != 2^|targets|");
  }
}

}  // namespace

EmbedPlan make_embed_plan(const std::vector<int>& targets, int n_total) {
  const int k = static_cast<int>(targets.size());
  if (n_total < 1 || k < 1 || k > n_total) {
    throw std::invalid_argument("embed: bad target/qubit counts");
  }
  std::vector<int> pos(k);
  Eigen::Index target_mask = 0;
  for (int t = 0; t < k; ++t) {
    if (targets[t] < 0 || targets[t] >= n_total) {
      throw std::invalid_argument("embed: target qubit out of range");
    }
    pos[t] = n_total - 1 - targets[t];  // qubit 0 = MSB
    const Eigen::Index bit = Eigen::Index{1} << pos[t];
    if (target_mask & bit) {
      throw std::invalid_argument("embed: duplicate target qubit");
    }
    target_mask |= bit;
  }

  EmbedPlan plan;
  plan.d = Eigen::Index{1} << k;
  plan.offsets.resize(plan.d);
  for (Eigen::Index i = 0; i < plan.d; ++i) {
    Eigen::Index ofs = 0;
    for (int t = 0; t < k; ++t) {
      if ((i >> (k - 1 - t)) & 1) ofs |= Eigen::Index{1} << pos[t];
    }
    plan.offsets[i] = ofs;
  }

  std::vector<int> free_pos;
  for (int p = 0; p < n_total; ++p) {
    if (!((target_mask >> p) & 1)) free_pos.push_back(p);
  }
  const Eigen::Index n_free = Eigen::Index{1} << free_pos.size();
  plan.bases.resize(n_free);
  for (Eigen::Index g = 0; g < n_free; ++g) {
    Eigen::Index base = 0;
    for (std::size_t b = 0; b < free_pos.size(); ++b) {
      if ((g >> b) & 1) base |= Eigen::Index{1} << free_pos[b];
    }
    plan.bases[g] = base;
  }
  return plan;
}

const CMat& pauli_x() {
  static const CMat m = [] {
    CMat x(2, 2);
    x << 0, 1, 1, 0;
    return x;
  }();
  return m;
}

const CMat& pauli_y() {
  static const CMat m = [] {
    CMat y(2, 2);
    y << 0.0, -kI, kI, 0.0;
    return y;
  }();
  return m;
}

const CMat& pauli_z() {
  static const CMat m = [] {
    CMat z(2, 2);
    z << 1, 0, 0, -1;
    return z;
  }();
  return m;
}

const CMat& identity2() {
  static const CMat m = CMat::Identity(2, 2);
  return m;
}

CMat single_qubit_matrix(const SingleQubitAngles& a) {
  return rz(a.gamma) * ry(a.beta) * rz(a.alpha);
}

CMat two_qubit_matrix(const TwoQubitAngles& t) {
  return two_qubit_rotation(t.theta_x, pauli_x()) *
         two_qubit_rotation(t.theta_y, pauli_y()) *
         two_qubit_rotation(t.theta_z, pauli_z());
}

SingleQubitAngles dagger_angles(const SingleQubitAngles& a) {
  return SingleQubitAngles{-a.gamma, -a.beta, -a.alpha};
}

TwoQubitAngles dagger_angles(const TwoQubitAngles& t) {
  return TwoQubitAngles{-t.theta_x, -t.theta_y, -t.theta_z};
}

CMat embed(const CMat& op, const std::vector<int>& targets, int n_total) {
  const EmbedPlan plan = make_embed_plan(targets, n_total);
  check_op_dim(op, plan);
  const Eigen::Index n = dim_of(n_total);
  CMat out = CMat::Zero(n, n);
  for (const Eigen::Index base : plan.bases) {
    for (Eigen::Index i = 0; i < plan.d; ++i) {
      for (Eigen::Index j = 0; j < plan.d; ++j) {
        out(base + plan.offsets[i], base + plan.offsets[j]) = op(i, j);
      }
    }
  }
  return out;
}

void apply_embedded_left(CMat& mat, const CMat& op,
                         const std::vector<int>& targets, int n_total) {
  const EmbedPlan plan = make_embed_plan(targets, n_total);
  check_op_dim(op, plan);
  if (mat.rows() != dim_of(n_total)) {
    throw std::invalid_argument("apply_embedded_left: row dim mismatch");
  }
  const Eigen::Index d = plan.d;
  std::vector<Complex> tmp(d);
  for (Eigen::Index c = 0; c < mat.cols(); ++c) {
    Complex* col = mat.col(c).data();
    for (const Eigen::Index base : plan.bases) {
      for (Eigen::Index i = 0; i < d; ++i) tmp[i] = col[base + plan.offsets[i]];
      for (Eigen::Index i = 0; i < d; ++i) {
        Complex acc = 0.0;
        for (Eigen::Index j = 0; j < d; ++j) acc += op(i, j) * tmp[j];
        col[base + plan.offsets[i]] = acc;
      }
    }
  }
}

void apply_embedded_right_dagger(CMat& mat, const CMat& op,
                                 const std::vector<int>& targets, int n_total) {
  const EmbedPlan plan = make_embed_plan(targets, n_total);
  check_op_dim(op, plan);
  if (mat.cols() != dim_of(n_total)) {
    throw std::invalid_argument("apply_embedded_right_dagger: col dim mismatch");
  }
  const Eigen::Index d = plan.d;
  const CMat adj = op.adjoint();
  CMat tmp(mat.rows(), d);
  for (const Eigen::Index base : plan.bases) {
    for (Eigen::Index i = 0; i < d; ++i) {
      tmp.col(i) = mat.col(base + plan.offsets[i]);
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      mat.col(base + plan.offsets[j]).noalias() = tmp * adj.col(j);
    }
  }
}

void conjugate_embedded(CMat& mat, const CMat& op,
                        const std::vector<int>& targets, int n_total) {
  apply_embedded_left(mat, op, targets, n_total);
  apply_embedded_right_dagger(mat, op, targets, n_total);
}

}  // namespace qae
