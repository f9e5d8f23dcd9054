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

#include "qae/train.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qae {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_train_config(const TrainConfig& c) {
  if (c.learning_rate <= 0.0) throw std::invalid_argument("learning_rate must be > 0");
  if (c.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (c.fd_step <= 0.0) throw std::invalid_argument("fd_step must be > 0");
  if (c.warm_sigma < 0.0) throw std::invalid_argument("warm_sigma must be >= 0");
  if (c.warm_steps < -1 || c.warm_steps == 0) {
    throw std::invalid_argument("warm_steps must be -1 or >= 1");
  }
}

// Shift-rule constants per gate kind: singles are products of exp(-i phi A/2)
// factors (half-angle rule), two-qubit rotations are exp(+i theta A(x)A) with
// an involutory generator (quarter shift, unit coefficient).
double shift_of(GateKind kind) { return kind == GateKind::single ? kPi / 2 : kPi / 4; }
double coeff_of(GateKind kind) { return kind == GateKind::single ? 0.5 : 1.0; }

// Quadratic form of one gate position: with the state sigma evolved up to the
// gate and the observable B pulled back to just after it,
//   F(G) = sum_{i,j,k,l} G(j,k) conj(G(i,l)) W[(i,j),(k,l)],
// so the six shifted evaluations of the position cost O(d^4) each instead of
// a full register conjugation.
struct GateQuadraticForm {
  Eigen::Index d = 0;
  CMat w;  // d^2 x d^2

  GateQuadraticForm(const CMat& state, const CMat& observable, const EmbedPlan& plan) {
    d = plan.d;
    const Eigen::Index n_rest = static_cast<Eigen::Index>(plan.bases.size());
    CMat obs_flat(d * d, n_rest * n_rest);
    CMat state_flat(d * d, n_rest * n_rest);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::Index row = i * d + j;
        for (Eigen::Index a = 0; a < n_rest; ++a) {
          const Eigen::Index ra = plan.bases[a];
          for (Eigen::Index b = 0; b < n_rest; ++b) {
            const Eigen::Index rb = plan.bases[b];
            obs_flat(row, a * n_rest + b) =
                observable(ra + plan.offsets[i], rb + plan.offsets[j]);
            state_flat(row, a * n_rest + b) =
                state(rb + plan.offsets[i], ra + plan.offsets[j]);
          }
        }
      }
    }
    w.noalias() = obs_flat * state_flat.transpose();
  }

  double value(const CMat& g) const {
    Complex f = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const auto row = w.row(i * d + j);
        Complex acc = 0.0;
        for (Eigen::Index k = 0; k < d; ++k) {
          const Complex gjk = g(j, k);
          for (Eigen::Index l = 0; l < d; ++l) {
            acc += gjk * std::conj(g(i, l)) * row(k * d + l);
          }
        }
        f += acc;
      }
    }
    return f.real();
  }
};

// Per-pair parameter-shift gradient via cached prefix states and pulled-back
// observables: exact shift-rule values, one pass over the circuit.
void add_pair_grad_param_shift(const ArchitectureSpec& arch, const ParamVector& params,
                               const DataPair& pair, double weight, ParamVector& grad) {
  const int n = arch.layout.n_total();
  const int n_gates = static_cast<int>(arch.gates.size());

  std::vector<CMat> mats(n_gates);
  std::vector<std::vector<int>> wires(n_gates);
  for (int k = 0; k < n_gates; ++k) {
    mats[k] = realized_gate(arch.gates[k], params);
    wires[k] = arch.gates[k].wire_list();
  }

  // Prefix states sigma[k] = state after the first k gates.
  std::vector<CMat> sigma(n_gates + 1);
  sigma[0] = extend_input(arch, pair.input).mat;
  for (int k = 0; k < n_gates; ++k) {
    sigma[k + 1] = sigma[k];
    conjugate_embedded(sigma[k + 1], mats[k], wires[k], n);
  }

  // Observable of the cost after the trace-out, pulled back gate by gate.
  CMat observable =
      embed(pair.reference.amplitudes * pair.reference.amplitudes.adjoint(),
            arch.layout.output_qubits(), n);

  for (int k = n_gates - 1; k >= 0; --k) {
    const GateInstance& g = arch.gates[k];
    const EmbedPlan plan = make_embed_plan(wires[k], n);
    const GateQuadraticForm form(sigma[k], observable, plan);
    const std::array<double, 3> base = realized_angles(g, params);
    for (int pos = 0; pos < 3; ++pos) {
      std::array<double, 3> shifted = base;
      shifted[pos] = base[pos] + shift_of(g.kind);
      const double f_plus = form.value(gate_from_realized(g.kind, shifted));
      shifted[pos] = base[pos] - shift_of(g.kind);
      const double f_minus = form.value(gate_from_realized(g.kind, shifted));
      grad[slot_of_realized(g, pos)] +=
          weight * g.sign * coeff_of(g.kind) * (f_plus - f_minus);
    }
    // Pull the observable back through gate k for the next position.
    if (k > 0) {
      const CMat adj = mats[k].adjoint();
      conjugate_embedded(observable, adj, wires[k], n);
    }
  }
}

void check_dataset(const ArchitectureSpec& arch, const DataSet& data) {
  if (data.pairs.empty()) throw std::invalid_argument("dataset is empty");
  if (data.m != arch.layout.m) {
    throw std::invalid_argument("dataset qubit count != architecture m");
  }
}

ParamVector per_sample_updates(const ArchitectureSpec& arch, const TrainConfig& config,
                               const DataSet& train_set, ParamVector params, int steps) {
  const std::size_t n = train_set.pairs.size();
  for (int step = 0; step < steps; ++step) {
    DataSet one;
    one.m = train_set.m;
    one.spec = train_set.spec;
    one.pairs.push_back(train_set.pairs[step % n]);
    params = sgd_step(params, gradient(arch, params, one, config), config.learning_rate);
  }
  return params;
}

}  // namespace

double fidelity_cost(const ArchitectureSpec& arch, const ParamVector& params,
                     const DataPair& pair) {
  return fidelity_pure(forward(arch, params, pair.input), pair.reference);
}

double average_cost(const ArchitectureSpec& arch, const ParamVector& params,
                    const DataSet& data) {
  check_dataset(arch, data);
  double sum = 0.0;
  for (const DataPair& pair : data.pairs) sum += fidelity_cost(arch, params, pair);
  return sum / static_cast<double>(data.pairs.size());
}

ParamVector grad_param_shift(const ArchitectureSpec& arch, const ParamVector& params,
                             const DataSet& data) {
  check_dataset(arch, data);
  if (params.size() != arch.n_slots) {
    throw std::invalid_argument("parameter vector length != architecture slots");
  }
  ParamVector grad = ParamVector::Zero(arch.n_slots);
  const double weight = 1.0 / static_cast<double>(data.pairs.size());
  for (const DataPair& pair : data.pairs) {
    add_pair_grad_param_shift(arch, params, pair, weight, grad);
  }
  return grad;
}

ParamVector grad_finite_diff(const ArchitectureSpec& arch, const ParamVector& params,
                             const DataSet& data, double h) {
  check_dataset(arch, data);
  if (h <= 0.0) throw std::invalid_argument("finite-difference step must be > 0");
  ParamVector grad = ParamVector::Zero(arch.n_slots);
  ParamVector probe = params;
  for (int s = 0; s < arch.n_slots; ++s) {
    const double saved = probe[s];
    probe[s] = saved + h;
    const double c_plus = average_cost(arch, probe, data);
    probe[s] = saved - h;
    const double c_minus = average_cost(arch, probe, data);
    probe[s] = saved;
    grad[s] = (c_plus - c_minus) / (2.0 * h);
  }
  return grad;
}

ParamVector gradient(const ArchitectureSpec& arch, const ParamVector& params,
                     const DataSet& data, const TrainConfig& config) {
  if (config.grad_method == GradMethod::param_shift) {
    return grad_param_shift(arch, params, data);
  }
  return grad_finite_diff(arch, params, data, config.fd_step);
}

ParamVector sgd_step(const ParamVector& params, const ParamVector& grad, double lr) {
  if (params.size() != grad.size()) {
    throw std::invalid_argument("sgd_step: length mismatch");
  }
  return params + lr * grad;
}

ParamVector random_params(int n_slots, Rng& rng) {
  ParamVector p(n_slots);
  for (int i = 0; i < n_slots; ++i) p[i] = rng.uniform(-kPi, kPi);
  return p;
}

ParamVector init_params(const ArchitectureSpec& arch, const TrainConfig& config,
                        const DataSet& train_set) {
  Rng rng(config.seed);
  if (config.init == InitKind::uniform) return random_params(arch.n_slots, rng);
  if (config.init == InitKind::transfer) {
    return transfer_start(arch, config, train_set, rng);
  }
  return warm_start(arch, config, train_set, rng);
}

TrainHistory train_average(const ArchitectureSpec& arch, const TrainConfig& config,
                           const DataSet& train_set, const DataSet& val_set) {
  check_train_config(config);
  if (config.strategy != Strategy::average) {
    throw std::invalid_argument("train_average: config strategy is not 'average'");
  }
  check_dataset(arch, train_set);
  check_dataset(arch, val_set);

  TrainHistory history;
  ParamVector params = init_params(arch, config, train_set);
  history.records.push_back(evaluate_metrics(arch, params, train_set, val_set, 0));
  for (int it = 1; it <= config.iterations; ++it) {
    params = sgd_step(params, gradient(arch, params, train_set, config),
                      config.learning_rate);
    history.records.push_back(evaluate_metrics(arch, params, train_set, val_set, it));
  }
  history.final_params = std::move(params);
  return history;
}

ParamVector train_per_sample(const ArchitectureSpec& arch, const TrainConfig& config,
                             const DataSet& train_set) {
  check_train_config(config);
  if (config.strategy != Strategy::per_sample) {
    throw std::invalid_argument("train_per_sample: config strategy is not 'per_sample'");
  }
  check_dataset(arch, train_set);
  Rng rng(config.seed);
  ParamVector params = random_params(arch.n_slots, rng);
  return per_sample_updates(arch, config, train_set, std::move(params),
                            static_cast<int>(train_set.pairs.size()));
}

ParamVector warm_start(const ArchitectureSpec& arch, const TrainConfig& config,
                       const DataSet& train_set, Rng& rng) {
  check_dataset(arch, train_set);
  ParamVector params = random_params(arch.n_slots, rng);
  const int steps = config.warm_steps < 0
                        ? static_cast<int>(train_set.pairs.size())
                        : config.warm_steps;
  params = per_sample_updates(arch, config, train_set, std::move(params), steps);
  for (int i = 0; i < params.size(); ++i) {
    params[i] += config.warm_sigma * rng.gaussian();
  }
  return params;
}

ParamVector transfer_start(const ArchitectureSpec& arch, const TrainConfig& config,
                           const DataSet& train_set, Rng& rng) {
  check_dataset(arch, train_set);
  const int m = arch.layout.m;
  if (arch.n_slots != 6 * m) {
    throw std::invalid_argument(
        "transfer init requires a tied architecture (6m slots)");
  }
  if (config.transfer_iterations < 1) {
    throw std::invalid_argument("transfer_iterations must be >= 1");
  }

  // Teacher: the plain architecture, whose first 6m slots are the encoder
  // block in the same layout as the tied architectures.
  const ArchitectureSpec teacher = build_qae_nisq(m);
  ParamVector teacher_params = warm_start(teacher, config, train_set, rng);
  for (int it = 0; it < config.transfer_iterations; ++it) {
    teacher_params =
        sgd_step(teacher_params, gradient(teacher, teacher_params, train_set, config),
                 config.learning_rate);
  }
  return teacher_params.head(arch.n_slots);
}

void save_params(const std::string& path, const ArchitectureSpec& arch,
                 const ParamVector& params) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << arch.name << " " << arch.layout.m << " " << arch.model << " "
      << arch.n_slots << "\n";
  char buf[64];
  for (int i = 0; i < params.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", params[i]);
    out << buf << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

ParamsFile load_params(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  ParamsFile file;
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty params file: " + path);
  std::istringstream hs(header);
  if (!(hs >> file.name >> file.m >> file.model >> file.n_slots) || file.n_slots < 1) {
    throw std::runtime_error("malformed params header: " + path);
  }
  file.values.resize(file.n_slots);
  for (int i = 0; i < file.n_slots; ++i) {
    if (!(in >> file.values[i])) {
      throw std::runtime_error("params file truncated: " + path);
    }
  }
  return file;
}

}  // namespace qae
