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

#include <complex>
#include <vector>

#include <Eigen/Dense>

// Dense complex linear algebra and quantum-state primitives.
//
// Qubit ordering convention (used everywhere in this library): qubit 0 is the
// MOST significant bit of a computational-basis index. For an n-qubit system
// the basis state |b0 b1 ... b(n-1)> has index b0*2^(n-1) + ... + b(n-1).

namespace qae {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline Eigen::Index dim_of(int n_qubits) {
  return Eigen::Index{1} << n_qubits;
}

/// Normalized state vector over n qubits.
struct PureState {
  int n_qubits = 0;
  CVec amplitudes;
};

/// Hermitian, PSD, trace-1 matrix over n qubits. Fields are public; hot paths
/// construct directly, boundaries go through make_density / is_valid_density.
struct DensityMatrix {
  int n_qubits = 0;
  CMat mat;
};

/// Builds a PureState and checks the unit-norm invariant (1e-10).
PureState make_pure(int n_qubits, CVec amplitudes);

/// Builds a DensityMatrix and checks all invariants (Hermiticity, unit trace,
/// eigenvalue floor). Throws std::invalid_argument on violation.
DensityMatrix make_density(int n_qubits, CMat mat);

DensityMatrix density_from_pure(const PureState& psi);

/// Kronecker product, dims (a.rows*b.rows) x (a.cols*b.cols).
CMat kron(const CMat& a, const CMat& b);

/// Reduced state on the kept qubits. `keep` is a set (order ignored,
/// duplicates rejected); kept qubits retain their original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// <ref| rho |ref> for a pure reference of the same qubit count.
double fidelity_pure(const DensityMatrix& rho, const PureState& ref);

// Invariant checks (used at construction boundaries and in tests).
bool is_normalized(const PureState& psi, double tol = 1e-10);
double hermiticity_error(const CMat& m);
double min_eigenvalue_hermitian(const CMat& m);
bool is_valid_density(const DensityMatrix& rho, double herm_tol = 1e-10,
                      double trace_tol = 1e-10, double eig_floor = -1e-8);

}  // namespace qae
