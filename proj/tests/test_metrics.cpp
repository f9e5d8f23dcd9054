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

#include <doctest.h>

#include <cmath>

#include "qae/metrics.hpp"
#include "qae/train.hpp"
#include "test_helpers.hpp"

using namespace qae;
using testing::random_density;

TEST_CASE("renyi entropy reference values") {
  CHECK(renyi2(density_from_pure(ghz(2))) == doctest::Approx(0.0).epsilon(1e-9));
  const DensityMatrix half{1, 0.5 * CMat::Identity(2, 2)};
  CHECK(renyi2(half) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  const DensityMatrix quarter{2, 0.25 * CMat::Identity(4, 4)};
  CHECK(renyi2(quarter) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("renyi entropy stays within [0, n ln 2]") {
  Rng rng(91);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = random_density(2, rng);
    const double e = renyi2(rho);
    CHECK(e >= -1e-9);
    CHECK(e <= 2 * std::log(2.0) + 1e-9);
  }
}

TEST_CASE("zero-parameter network has pure hidden and output subsystems") {
  for (const ArchitectureSpec& arch : {build_qae_nisq(2), build_qae_conj(2)}) {
    const SubsystemEntropies e = subsystem_entropies(
        arch, ParamVector::Zero(arch.n_slots), density_from_pure(ghz(2)));
    CHECK(e.hidden == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(e.output == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("subsystem entropies match the direct composition") {
  Rng rng(92);
  for (const ArchitectureSpec& arch :
       {build_qae_nisq(2), build_qae_conj_mod_dec(3, 3)}) {
    const int m = arch.layout.m;
    const ParamVector params = random_params(arch.n_slots, rng);
    const DensityMatrix input = random_density(m, rng);
    const SubsystemEntropies got = subsystem_entropies(arch, params, input);

    const DensityMatrix full = final_state(arch, params, input);
    const double hidden =
        -std::log(purity(partial_trace(full, {arch.layout.hidden()})));
    const double output =
        -std::log(purity(partial_trace(full, arch.layout.output_qubits())));
    CHECK(got.hidden == doctest::Approx(hidden).epsilon(1e-10));
    CHECK(got.output == doctest::Approx(output).epsilon(1e-10));
  }
}

TEST_CASE("evaluate_metrics fields match independent recomputation") {
  Rng rng(93), tr(94), vr(95);
  const ArchitectureSpec arch = build_qae_conj(2);
  const ParamVector params = random_params(arch.n_slots, rng);
  const DataSet train_set = make_training_set(2, 0.3, 4, tr);
  const DataSet val_set = make_validation_set(2, 0.3, 3, vr);

  const IterationRecord rec = evaluate_metrics(arch, params, train_set, val_set, 7);
  CHECK(rec.iter == 7);

  double cost = 0.0, fid_clean = 0.0, ren_h = 0.0, ren_o = 0.0;
  for (const DataPair& pair : train_set.pairs) {
    cost += fidelity_cost(arch, params, pair);
    fid_clean += fidelity_pure(forward(arch, params, pair.input), ghz(2));
    const SubsystemEntropies e = subsystem_entropies(arch, params, pair.input);
    ren_h += e.hidden;
    ren_o += e.output;
  }
  double fid_val = 0.0;
  for (const DataPair& pair : val_set.pairs) {
    fid_val += fidelity_pure(forward(arch, params, pair.input), ghz(2));
  }
  const double nt = 4.0, nv = 3.0;
  CHECK(rec.cost_train == doctest::Approx(cost / nt).epsilon(1e-12));
  CHECK(rec.fid_train_clean == doctest::Approx(fid_clean / nt).epsilon(1e-12));
  CHECK(rec.fid_val == doctest::Approx(fid_val / nv).epsilon(1e-12));
  CHECK(rec.renyi_hidden == doctest::Approx(ren_h / nt).epsilon(1e-12));
  CHECK(rec.renyi_output == doctest::Approx(ren_o / nt).epsilon(1e-12));
}

TEST_CASE("evaluate_metrics is invariant under pair duplication") {
  Rng rng(96), tr(97), vr(98);
  const ArchitectureSpec arch = build_qae_nisq(2);
  const ParamVector params = random_params(arch.n_slots, rng);
  DataSet train_set = make_training_set(2, 0.2, 2, tr);
  DataSet val_set = make_validation_set(2, 0.2, 2, vr);

  const IterationRecord before = evaluate_metrics(arch, params, train_set, val_set, 0);
  train_set.pairs.push_back(train_set.pairs[0]);
  train_set.pairs.push_back(train_set.pairs[1]);
  val_set.pairs.push_back(val_set.pairs[0]);
  val_set.pairs.push_back(val_set.pairs[1]);
  const IterationRecord after = evaluate_metrics(arch, params, train_set, val_set, 0);
  CHECK(after.cost_train == doctest::Approx(before.cost_train).epsilon(1e-12));
  CHECK(after.fid_train_clean == doctest::Approx(before.fid_train_clean).epsilon(1e-12));
  CHECK(after.fid_val == doctest::Approx(before.fid_val).epsilon(1e-12));
  CHECK(after.renyi_hidden == doctest::Approx(before.renyi_hidden).epsilon(1e-12));
  CHECK(after.renyi_output == doctest::Approx(before.renyi_output).epsilon(1e-12));
}

TEST_CASE("evaluate_metrics rejects empty datasets") {
  const ArchitectureSpec arch = build_qae_nisq(2);
  Rng tr(99);
  const DataSet train_set = make_training_set(2, 0.2, 2, tr);
  DataSet empty;
  empty.m = 2;
  CHECK_THROWS_AS((void)evaluate_metrics(arch, ParamVector::Zero(arch.n_slots),
                                         train_set, empty, 0),
                  std::invalid_argument);
}

TEST_CASE("a converged noise-free run reaches unit fidelities and pure outputs") {
  // Short modified-decoder training at p = 0: the landscape is smooth and
  // 100 iterations reach fidelity ~1.
  const ArchitectureSpec arch = build_qae_conj_mod_dec(2, 3);
  Rng tr(100), vr(101);
  const DataSet train_set = make_training_set(2, 0.0, 5, tr);
  const DataSet val_set = make_validation_set(2, 0.0, 5, vr);
  TrainConfig config;
  config.iterations = 100;
  config.init = InitKind::warm_start;
  config.seed = 2;
  const TrainHistory history = train_average(arch, config, train_set, val_set);
  const IterationRecord final = history.records.back();
  CHECK(final.cost_train > 0.995);
  CHECK(final.fid_train_clean > 0.995);
  CHECK(final.fid_val > 0.995);
  CHECK(final.renyi_output < 0.05);
}
