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

#include "qae/network.hpp"

#include <sstream>
#include <stdexcept>

namespace qae {

namespace {

void require_m(int m) {
  if (m < 2) throw std::invalid_argument("architecture requires m >= 2");
}

GateInstance single_on(int wire, int slot_base, int sign = +1) {
  GateInstance g;
  g.kind = GateKind::single;
  g.wires = {wire, 0};
  g.slots = {slot_base, slot_base + 1, slot_base + 2};
  g.sign = sign;
  return g;
}

GateInstance two_on(int wire_a, int wire_b, int slot_base, int sign = +1) {
  GateInstance g;
  g.kind = GateKind::two_qubit;
  g.wires = {wire_a, wire_b};
  g.slots = {slot_base, slot_base + 1, slot_base + 2};
  g.sign = sign;
  return g;
}

// Encoder shared by the conjugate-layer variants: singles on the inputs,
// then input-hidden couplings. Slot groups 3j = input single j, 3(m+j) =
// input-hidden coupling j.
void append_conj_encoder(ArchitectureSpec& arch) {
  const int m = arch.layout.m;
  for (int i = 0; i < m; ++i) {
    arch.gates.push_back(single_on(arch.layout.input(i), 3 * i));
  }
  for (int i = 0; i < m; ++i) {
    arch.gates.push_back(
        two_on(arch.layout.input(i), arch.layout.hidden(), 3 * (m + i)));
  }
}

// Tied output singles, ascending qubit index; output j reuses input single j.
void append_tied_output_singles(ArchitectureSpec& arch) {
  const int m = arch.layout.m;
  for (int j = 0; j < m; ++j) {
    arch.gates.push_back(single_on(arch.layout.output(j), 3 * j, -1));
  }
}

// Decoder two-qubit couplings of the modified decoder, as wire pairs.
std::vector<std::array<int, 2>> mod_dec_couplings(const QubitLayout& lay, int model) {
  const int m = lay.m;
  std::vector<std::array<int, 2>> c;
  if (m == 2) {
    // The (2-1-2) wiring: hidden to the far output, then output to output.
    c.push_back({lay.hidden(), lay.output(1)});
    c.push_back({lay.output(1), lay.output(0)});
    return c;
  }
  switch (model) {
    case 3:  // chain hidden -> out0 -> out1 -> ...
      c.push_back({lay.hidden(), lay.output(0)});
      for (int j = 1; j < m; ++j) c.push_back({lay.output(j - 1), lay.output(j)});
      break;
    case 2:  // star: hidden -> out0, then out0 -> outj
      c.push_back({lay.hidden(), lay.output(0)});
      for (int j = 1; j < m; ++j) c.push_back({lay.output(0), lay.output(j)});
      break;
    case 1:  // two direct links, remainder hangs off out1
      c.push_back({lay.hidden(), lay.output(0)});
      c.push_back({lay.hidden(), lay.output(1)});
      for (int j = 2; j < m; ++j) c.push_back({lay.output(1), lay.output(j)});
      break;
    default:
      throw std::invalid_argument("mod-dec model must be 1, 2 or 3");
  }
  return c;
}

}  // namespace

std::vector<int> QubitLayout::input_qubits() const {
  std::vector<int> q(m);
  for (int i = 0; i < m; ++i) q[i] = input(i);
  return q;
}

std::vector<int> QubitLayout::output_qubits() const {
  std::vector<int> q(m);
  for (int j = 0; j < m; ++j) q[j] = output(j);
  return q;
}

ArchitectureSpec build_qae_nisq(int m) {
  require_m(m);
  ArchitectureSpec arch;
  arch.name = "qae_nisq";
  arch.layout.m = m;
  arch.n_slots = 3 * (4 * m + 1);
  int slot = 0;
  for (int i = 0; i < m; ++i) {
    arch.gates.push_back(single_on(arch.layout.input(i), slot));
    slot += 3;
  }
  for (int i = 0; i < m; ++i) {
    arch.gates.push_back(two_on(arch.layout.input(i), arch.layout.hidden(), slot));
    slot += 3;
  }
  arch.gates.push_back(single_on(arch.layout.hidden(), slot));
  slot += 3;
  for (int j = 0; j < m; ++j) {
    arch.gates.push_back(two_on(arch.layout.hidden(), arch.layout.output(j), slot));
    slot += 3;
  }
  for (int j = 0; j < m; ++j) {
    arch.gates.push_back(single_on(arch.layout.output(j), slot));
    slot += 3;
  }
  return arch;
}

ArchitectureSpec build_qae_conj(int m) {
  require_m(m);
  ArchitectureSpec arch;
  arch.name = "qae_conj";
  arch.layout.m = m;
  arch.n_slots = 6 * m;
  append_conj_encoder(arch);
  for (int j = 0; j < m; ++j) {
    arch.gates.push_back(
        two_on(arch.layout.hidden(), arch.layout.output(j), 3 * (m + j), -1));
  }
  append_tied_output_singles(arch);
  return arch;
}

ArchitectureSpec build_qae_conj_mod_dec(int m, int model) {
  require_m(m);
  if (model < 1 || model > 3) {
    throw std::invalid_argument("mod-dec model must be 1, 2 or 3");
  }
  ArchitectureSpec arch;
  arch.name = "qae_conj_mod_dec";
  arch.layout.m = m;
  arch.model = model;
  arch.n_slots = 6 * m;
  append_conj_encoder(arch);
  const auto couplings = mod_dec_couplings(arch.layout, model);
  for (std::size_t k = 0; k < couplings.size(); ++k) {
    arch.gates.push_back(two_on(couplings[k][0], couplings[k][1],
                                3 * (m + static_cast<int>(k)), -1));
  }
  append_tied_output_singles(arch);
  return arch;
}

ArchitectureSpec build_architecture(const std::string& name, int m, int model) {
  if (name == "qae_nisq") return build_qae_nisq(m);
  if (name == "qae_conj") return build_qae_conj(m);
  if (name == "qae_conj_mod_dec") return build_qae_conj_mod_dec(m, model);
  throw std::invalid_argument("unknown architecture: " + name);
}

std::array<double, 3> realized_angles(const GateInstance& g, const ParamVector& params) {
  for (int s : g.slots) {
    if (s < 0 || s >= params.size()) {
      throw std::invalid_argument("gate instance references slot out of range");
    }
  }
  const std::array<double, 3> v{params[g.slots[0]], params[g.slots[1]],
                                params[g.slots[2]]};
  if (g.sign >= 0) return v;
  if (g.kind == GateKind::single) return {-v[2], -v[1], -v[0]};
  return {-v[0], -v[1], -v[2]};
}

int slot_of_realized(const GateInstance& g, int pos) {
  if (g.sign < 0 && g.kind == GateKind::single) return g.slots[2 - pos];
  return g.slots[pos];
}

CMat gate_from_realized(GateKind kind, const std::array<double, 3>& angles) {
  if (kind == GateKind::single) {
    return single_qubit_matrix(SingleQubitAngles{angles[0], angles[1], angles[2]});
  }
  return two_qubit_matrix(TwoQubitAngles{angles[0], angles[1], angles[2]});
}

CMat realized_gate(const GateInstance& g, const ParamVector& params) {
  return gate_from_realized(g.kind, realized_angles(g, params));
}

DensityMatrix extend_input(const ArchitectureSpec& arch, const DensityMatrix& input) {
  const int m = arch.layout.m;
  if (input.n_qubits != m) {
    throw std::invalid_argument("forward: input qubit count != m");
  }
  const int n = arch.layout.n_total();
  const Eigen::Index din = dim_of(m);
  const int ancillas = m + 1;
  CMat ext = CMat::Zero(dim_of(n), dim_of(n));
  // Ancillas are the least significant bits, all |0>: rho (x) |0..0><0..0|.
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      ext(i << ancillas, j << ancillas) = input.mat(i, j);
    }
  }
  return DensityMatrix{n, std::move(ext)};
}

static void check_params(const ArchitectureSpec& arch, const ParamVector& params) {
  if (params.size() != arch.n_slots) {
    throw std::invalid_argument("parameter vector length != architecture slots");
  }
}

DensityMatrix final_state(const ArchitectureSpec& arch, const ParamVector& params,
                          const DensityMatrix& input) {
  check_params(arch, params);
  DensityMatrix state = extend_input(arch, input);
  const int n = arch.layout.n_total();
  for (const GateInstance& g : arch.gates) {
    conjugate_embedded(state.mat, realized_gate(g, params), g.wire_list(), n);
  }
  return state;
}

DensityMatrix forward(const ArchitectureSpec& arch, const ParamVector& params,
                      const DensityMatrix& input) {
  DensityMatrix full = final_state(arch, params, input);
  return partial_trace(full, arch.layout.output_qubits());
}

CMat unitary_of(const ArchitectureSpec& arch, const ParamVector& params) {
  check_params(arch, params);
  const int n = arch.layout.n_total();
  CMat u = CMat::Identity(dim_of(n), dim_of(n));
  for (const GateInstance& g : arch.gates) {
    u = embed(realized_gate(g, params), g.wire_list(), n) * u;
  }
  return u;
}

std::string describe(const ArchitectureSpec& arch) {
  std::ostringstream os;
  os << "name " << arch.name << "\n";
  os << "m " << arch.layout.m << "\n";
  os << "model " << arch.model << "\n";
  os << "n_slots " << arch.n_slots << "\n";
  for (const GateInstance& g : arch.gates) {
    os << (g.kind == GateKind::single ? "single" : "two_qubit");
    os << " wires";
    for (int w : g.wire_list()) os << " " << w;
    os << " slots " << g.slots[0] << " " << g.slots[1] << " " << g.slots[2];
    os << " sign " << (g.sign < 0 ? "-1" : "+1") << "\n";
  }
  return os.str();
}

}  // namespace qae
