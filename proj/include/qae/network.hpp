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

#include <array>
#include <string>
#include <vector>

#include "qae/gates.hpp"
#include "qae/qmath.hpp"

// Autoencoder architectures over an (m-1-m) qubit register: m input qubits
// (indices 0..m-1), one hidden qubit (index m), m output qubits (m+1..2m).
// An architecture is an ordered gate-instance table over parameter slots;
// instances with sign -1 realize the Hermitian conjugate of the slot angles,
// which is how conjugate-layer parameter tying is encoded.

namespace qae {

using ParamVector = Eigen::VectorXd;

enum class GateKind { single, two_qubit };

struct GateInstance {
  GateKind kind = GateKind::single;
  std::array<int, 2> wires{0, 0};  // wires[1] unused for singles
  std::array<int, 3> slots{0, 0, 0};
  int sign = +1;

  int n_wires() const { return kind == GateKind::single ? 1 : 2; }
  std::vector<int> wire_list() const {
    return kind == GateKind::single ? std::vector<int>{wires[0]}
                                    : std::vector<int>{wires[0], wires[1]};
  }
};

struct QubitLayout {
  int m = 2;
  int n_total() const { return 2 * m + 1; }
  int input(int i) const { return i; }
  int hidden() const { return m; }
  int output(int j) const { return m + 1 + j; }
  std::vector<int> input_qubits() const;
  std::vector<int> output_qubits() const;
};

struct ArchitectureSpec {
  std::string name;
  QubitLayout layout;
  int model = 0;  // 0 unless the decoder is modified
  std::vector<GateInstance> gates;  // application order, first applied first
  int n_slots = 0;
};

/// Plain (m-1-m) autoencoder: independent slots, 3(4m+1) of them.
ArchitectureSpec build_qae_nisq(int m);

/// Conjugate-layer variant: the decoder reuses encoder slots with sign -1
/// and the hidden single-qubit gate is dropped; 6m slots.
ArchitectureSpec build_qae_conj(int m);

/// Conjugate-layer variant with a modified decoder. Model 3 chains the
/// outputs from the hidden qubit, model 2 fans out from the first output,
/// model 1 keeps two direct hidden links. For m = 2 only the chain exists
/// and every model selects it.
ArchitectureSpec build_qae_conj_mod_dec(int m, int model);

/// Dispatch by architecture name ("qae_nisq", "qae_conj", "qae_conj_mod_dec").
ArchitectureSpec build_architecture(const std::string& name, int m, int model);

/// Angles actually fed to the gate constructor once the instance sign is
/// applied: identity for sign +1, negate-and-reverse (singles) or negate
/// (two-qubit) for sign -1.
std::array<double, 3> realized_angles(const GateInstance& g, const ParamVector& params);

/// Parameter slot behind realized-angle position `pos`, with the derivative
/// d(realized)/d(slot), which is the instance sign.
int slot_of_realized(const GateInstance& g, int pos);

CMat gate_from_realized(GateKind kind, const std::array<double, 3>& angles);

/// Gate matrix of one instance under the given parameters (sign applied).
CMat realized_gate(const GateInstance& g, const ParamVector& params);

/// Input extended with hidden+output qubits in |0><0|, not yet evolved.
DensityMatrix extend_input(const ArchitectureSpec& arch, const DensityMatrix& input);

/// The full channel: extend, conjugate by every gate in order, trace out
/// inputs and hidden. Returns the m-qubit output state.
DensityMatrix forward(const ArchitectureSpec& arch, const ParamVector& params,
                      const DensityMatrix& input);

/// As forward but without the final partial trace (all 2m+1 qubits).
DensityMatrix final_state(const ArchitectureSpec& arch, const ParamVector& params,
                          const DensityMatrix& input);

/// Ordered product of all embedded gate matrices (first applied rightmost).
CMat unitary_of(const ArchitectureSpec& arch, const ParamVector& params);

/// Plain-text instance table (one line per gate) for audits and golden tests.
std::string describe(const ArchitectureSpec& arch);

}  // namespace qae
