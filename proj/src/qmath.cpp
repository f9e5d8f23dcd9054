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

#include "qae/qmath.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qae {

PureState make_pure(int n_qubits, CVec amplitudes) {
  if (n_qubits < 0) {
    throw std::invalid_argument("make_pure: negative qubit count");
  }
  if (amplitudes.size() != dim_of(n_qubits)) {
    throw std::invalid_argument("make_pure: amplitude length != 2^n");
  }
  PureState psi{n_qubits, std::move(amplitudes)};
  if (!is_normalized(psi)) {
    throw std::invalid_argument("make_pure: state is not normalized");
  }
  return psi;
}

DensityMatrix make_density(int n_qubits, CMat mat) {
  if (n_qubits < 0) {
    throw std::invalid_argument("make_density: negative qubit count");
  }
  if (mat.rows() != dim_of(n_qubits) || mat.cols() != dim_of(n_qubits)) {
    throw std::invalid_argument("make_density: matrix dims != 2^n x 2^n");
  }
  DensityMatrix rho{n_qubits, std::move(mat)};
  if (!is_valid_density(rho)) {
    throw std::invalid_argument("make_density: invariants violated");
  }
  return rho;
}

DensityMatrix density_from_pure(const PureState& psi) {
  return DensityMatrix{psi.n_qubits,
                       psi.amplitudes * psi.amplitudes.adjoint()};
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.n_qubits;
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 0 || kept[i] >= n) {
      throw std::invalid_argument("partial_trace: qubit index out of range");
    }
    if (i > 0 && kept[i] == kept[i - 1]) {
      throw std::invalid_argument("partial_trace: duplicate qubit index");
    }
  }

  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  const int n_keep = static_cast<int>(kept.size());
  const int n_tr = static_cast<int>(traced.size());
  const Eigen::Index dk = dim_of(n_keep);
  const Eigen::Index dt = dim_of(n_tr);

  // Bit position of qubit q within an n-qubit index (qubit 0 = MSB).
  auto bitpos = [](int q, int nq) { return nq - 1 - q; };

  // Expand a reduced index into the bits it contributes to the full index.
  auto spread = [&](Eigen::Index idx, const std::vector<int>& qubits) {
    Eigen::Index full = 0;
    const int k = static_cast<int>(qubits.size());
    for (int t = 0; t < k; ++t) {
      if ((idx >> (k - 1 - t)) & 1) full |= Eigen::Index{1} << bitpos(qubits[t], n);
    }
    return full;
  };

  CMat out = CMat::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    const Eigen::Index fr = spread(r, kept);
    for (Eigen::Index c = 0; c < dk; ++c) {
      const Eigen::Index fc = spread(c, kept);
      Complex acc = 0.0;
      for (Eigen::Index s = 0; s < dt; ++s) {
        const Eigen::Index fs = spread(s, traced);
        acc += rho.mat(fr | fs, fc | fs);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix{n_keep, std::move(out)};
}

double purity(const DensityMatrix& rho) {
  // Tr rho^2 = sum_ij rho_ij rho_ji, avoiding the full matrix product.
  const Complex tr = rho.mat.cwiseProduct(rho.mat.transpose()).sum();
  return tr.real();
}

double fidelity_pure(const DensityMatrix& rho, const PureState& ref) {
  if (rho.n_qubits != ref.n_qubits) {
    throw std::invalid_argument("fidelity_pure: qubit-count mismatch");
  }
  const Complex f = ref.amplitudes.adjoint() * rho.mat * ref.amplitudes;
  return f.real();
}

bool is_normalized(const PureState& psi, double tol) {
  return std::abs(psi.amplitudes.norm() - 1.0) < tol;
}

double hermiticity_error(const CMat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue_hermitian(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_valid_density(const DensityMatrix& rho, double herm_tol,
                      double trace_tol, double eig_floor) {
  if (rho.mat.rows() != dim_of(rho.n_qubits) ||
      rho.mat.cols() != dim_of(rho.n_qubits)) {
    return false;
  }
  if (hermiticity_error(rho.mat) >= herm_tol) return false;
  if (std::abs(rho.mat.trace().real() - 1.0) >= trace_tol ||
      std::abs(rho.mat.trace().imag()) >= trace_tol) {
    return false;
  }
  return min_eigenvalue_hermitian(rho.mat) >= eig_floor;
}

}  // namespace qae
