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

#include "qae/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "qae/svg.hpp"

namespace qae {

namespace {

namespace fs = std::filesystem;

TrainConfig to_train_config(const RunConfig& c) {
  TrainConfig t;
  t.strategy = Strategy::average;
  t.learning_rate = c.learning_rate;
  t.iterations = c.iterations;
  t.grad_method = c.grad_method;
  t.fd_step = c.fd_step;
  t.init = c.init;
  t.warm_steps = c.warm_steps;
  t.warm_sigma = c.warm_sigma;
  t.transfer_iterations = c.transfer_iterations;
  t.seed = derive_seed(c.seed, 3);
  return t;
}

std::string meta_text(const RunConfig& c, const ArchitectureSpec& arch) {
  std::ostringstream os;
  os << serialize_config(c);
  os << "derived_train_set_seed = " << derive_seed(c.seed, 1) << "\n";
  os << "derived_val_set_seed = " << derive_seed(c.seed, 2) << "\n";
  os << "derived_init_seed = " << derive_seed(c.seed, 3) << "\n";
  os << "n_slots = " << arch.n_slots << "\n";
  os << "depolarizing_convention = " << depolarizing_convention() << "\n";
  return os.str();
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create out_dir '" + dir + "': " + ec.message());
}

IterationRecord train_without_history(const RunData& data, int iterations,
                                      IterationRecord* initial = nullptr) {
  // Leaner loop for sweeps: metrics only before and after training.
  ParamVector params = init_params(data.arch, data.train_config, data.train_set);
  if (initial != nullptr) {
    *initial = evaluate_metrics(data.arch, params, data.train_set, data.val_set, 0);
  }
  for (int it = 1; it <= iterations; ++it) {
    params = sgd_step(params,
                      gradient(data.arch, params, data.train_set, data.train_config),
                      data.train_config.learning_rate);
  }
  return evaluate_metrics(data.arch, params, data.train_set, data.val_set, iterations);
}

struct PresetDef {
  std::string name;
  std::vector<PresetRun> (*plan)(std::uint64_t seed, const std::string& out_dir);
  const char* note;
};

RunConfig base_run(const std::string& arch, int m, int model, double p,
                   std::uint64_t seed, const std::string& out_dir) {
  RunConfig c;
  c.arch_name = arch;
  c.m = m;
  c.model = model;
  c.p_train = p;
  c.p_val_max = p;
  // Paper-caption settings: N = 30, lr = 0.4, average cost, warm start.
  c.init = InitKind::warm_start;
  c.seed = seed;
  c.out_dir = out_dir;
  return c;
}

std::vector<PresetRun> plan_212_compare_at(double p, std::uint64_t seed,
                                           const std::string& out) {
  return {
      {"train", base_run("qae_nisq", 2, 0, p, derive_seed(seed, 1), out)},
      {"train", base_run("qae_conj", 2, 0, p, derive_seed(seed, 2), out)},
  };
}

std::vector<PresetRun> plan_212_compare(std::uint64_t seed, const std::string& out) {
  return plan_212_compare_at(0.2, seed, out);
}

std::vector<PresetRun> plan_212_compare_p04(std::uint64_t seed, const std::string& out) {
  return plan_212_compare_at(0.4, seed, out);
}

std::vector<PresetRun> plan_212_moddec(std::uint64_t seed, const std::string& out) {
  return {
      {"train", base_run("qae_conj_mod_dec", 2, 3, 0.2, derive_seed(seed, 1), out)},
      {"train", base_run("qae_conj_mod_dec", 2, 3, 0.4, derive_seed(seed, 2), out)},
  };
}

std::vector<PresetRun> plan_313_models(std::uint64_t seed, const std::string& out) {
  return {
      {"train", base_run("qae_nisq", 3, 0, 0.2, derive_seed(seed, 1), out)},
      {"train", base_run("qae_conj", 3, 0, 0.2, derive_seed(seed, 2), out)},
      {"train", base_run("qae_conj_mod_dec", 3, 2, 0.2, derive_seed(seed, 3), out)},
      {"train", base_run("qae_conj_mod_dec", 3, 3, 0.2, derive_seed(seed, 4), out)},
  };
}

std::vector<PresetRun> plan_313_m3_p04(std::uint64_t seed, const std::string& out) {
  return {
      {"train", base_run("qae_conj_mod_dec", 3, 3, 0.4, derive_seed(seed, 1), out)},
  };
}

std::vector<PresetRun> plan_212_noise_sweep(std::uint64_t seed, const std::string& out) {
  PresetRun run{"sweep", base_run("qae_conj_mod_dec", 2, 3, 0.2, derive_seed(seed, 1), out), 50};
  return {run};
}

std::vector<PresetRun> plan_313_noise_sweep(std::uint64_t seed, const std::string& out) {
  PresetRun run{"sweep", base_run("qae_conj_mod_dec", 3, 3, 0.2, derive_seed(seed, 1), out), 100};
  return {run};
}

const PresetDef kPresets[] = {
    {"212-compare", plan_212_compare, "(2-1-2) plain vs conjugate at p = 0.2"},
    {"212-compare-p04", plan_212_compare_p04, "(2-1-2) plain vs conjugate at p = 0.4"},
    {"212-moddec", plan_212_moddec, "(2-1-2) modified decoder at p = 0.2 and 0.4"},
    {"313-models", plan_313_models, "(3-1-3) plain, conjugate, models 2 and 3 at p = 0.2"},
    {"313-m3-p04", plan_313_m3_p04, "(3-1-3) model 3 at p = 0.4"},
    {"212-noise-sweep", plan_212_noise_sweep, "(2-1-2) modified decoder, 50-iteration noise sweep"},
    {"313-noise-sweep", plan_313_noise_sweep, "(3-1-3) model 3, 100-iteration noise sweep"},
};

const PresetDef& find_preset(const std::string& name) {
  for (const PresetDef& p : kPresets) {
    if (p.name == name) return p;
  }
  std::ostringstream os;
  os << "unknown preset '" << name << "'; available:";
  for (const PresetDef& p : kPresets) os << " " << p.name;
  throw std::runtime_error(os.str());
}

}  // namespace

RunData prepare_run(const RunConfig& config) {
  validate_config(config);
  RunData data;
  data.arch = build_architecture(config.arch_name, config.m, config.model);
  Rng train_rng(derive_seed(config.seed, 1));
  data.train_set = make_training_set(config.m, config.p_train, config.n_train, train_rng);
  data.train_set.spec.seed = derive_seed(config.seed, 1);
  Rng val_rng(derive_seed(config.seed, 2));
  data.val_set = make_validation_set(config.m, config.p_val_max, config.n_val, val_rng);
  data.val_set.spec.seed = derive_seed(config.seed, 2);
  data.train_config = to_train_config(config);
  return data;
}

std::string run_label(const RunConfig& config) {
  std::ostringstream os;
  os << config.arch_name << "_m" << config.m;
  if (config.model != 0) os << "_model" << config.model;
  os << "_p" << format_double(config.p_train);
  return os.str();
}

RunResult cmd_train(const RunConfig& config) {
  RunData data = prepare_run(config);
  ensure_out_dir(config.out_dir);
  RunResult result;
  result.config = config;
  result.history = train_average(data.arch, data.train_config, data.train_set,
                                 data.val_set);
  const std::string stem = (fs::path(config.out_dir) / run_label(config)).string();
  result.csv_path = stem + ".csv";
  result.params_path = stem + ".params";
  result.meta_path = stem + ".meta";
  write_history_csv(result.csv_path, result.history.records);
  save_params(result.params_path, data.arch, result.history.final_params);
  write_text_file(result.meta_path, meta_text(config, data.arch));
  return result;
}

SweepResult cmd_sweep(const SweepConfig& sweep) {
  validate_config(sweep.base);
  if (sweep.p_values.empty()) throw std::runtime_error("sweep: empty p grid");
  for (double p : sweep.p_values) {
    if (p < 0.0 || p > 1.0) throw std::runtime_error("sweep: p outside [0,1]");
  }
  ensure_out_dir(sweep.base.out_dir);

  SweepResult result;
  for (std::size_t i = 0; i < sweep.p_values.size(); ++i) {
    RunConfig point = sweep.base;
    point.p_train = sweep.p_values[i];
    point.p_val_max = sweep.p_values[i];
    point.iterations = sweep.iterations_at_eval;
    point.seed = derive_seed(sweep.base.seed, 1000 + static_cast<std::uint64_t>(i));
    const RunData data = prepare_run(point);
    const IterationRecord final =
        train_without_history(data, sweep.iterations_at_eval);
    result.rows.push_back(SweepRow{sweep.p_values[i], final.fid_train_clean,
                                   final.fid_val, final.renyi_hidden,
                                   final.renyi_output});
  }

  const std::string stem =
      (fs::path(sweep.base.out_dir) / (run_label(sweep.base) + "_sweep")).string();
  result.csv_path = stem + ".csv";
  result.meta_path = stem + ".meta";
  write_sweep_csv(result.csv_path, result.rows);
  std::ostringstream meta;
  meta << serialize_config(sweep.base);
  meta << "iterations_at_eval = " << sweep.iterations_at_eval << "\n";
  meta << "p_values =";
  for (double p : sweep.p_values) meta << " " << format_double(p);
  meta << "\n";
  meta << "depolarizing_convention = " << depolarizing_convention() << "\n";
  write_text_file(result.meta_path, meta.str());
  return result;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const PresetDef& p : kPresets) names.push_back(p.name);
  return names;
}

std::vector<PresetRun> preset_plan(const std::string& name, std::uint64_t seed,
                                   const std::string& out_dir) {
  return find_preset(name).plan(seed, out_dir);
}

std::vector<std::string> cmd_preset(const std::string& name,
                                    std::optional<std::uint64_t> seed,
                                    std::optional<std::string> out_dir) {
  const std::uint64_t master = seed.value_or(42);
  const std::string out = out_dir.value_or("out/" + name);
  const std::vector<PresetRun> runs = preset_plan(name, master, out);

  std::vector<std::string> written;
  std::vector<Series> fid_series;
  for (const PresetRun& run : runs) {
    if (run.kind == "train") {
      const RunResult res = cmd_train(run.config);
      written.push_back(res.csv_path);
      written.push_back(res.params_path);
      written.push_back(res.meta_path);
      Series train_curve, val_curve;
      train_curve.label = run_label(run.config) + " train";
      val_curve.label = run_label(run.config) + " val";
      for (const IterationRecord& r : res.history.records) {
        train_curve.x.push_back(r.iter);
        train_curve.y.push_back(r.fid_train_clean);
        val_curve.x.push_back(r.iter);
        val_curve.y.push_back(r.fid_val);
      }
      fid_series.push_back(std::move(train_curve));
      fid_series.push_back(std::move(val_curve));
    } else {
      SweepConfig sweep;
      sweep.base = run.config;
      sweep.p_values = default_sweep_grid();
      sweep.iterations_at_eval = run.sweep_iterations;
      const SweepResult res = cmd_sweep(sweep);
      written.push_back(res.csv_path);
      written.push_back(res.meta_path);
      for (const char* col :
           {"fid_train_final", "fid_val_final", "renyi_hidden_final",
            "renyi_output_final"}) {
        Series s;
        s.label = col;
        for (const SweepRow& row : res.rows) {
          s.x.push_back(row.p);
          double v = 0.0;
          if (std::string(col) == "fid_train_final") v = row.fid_train_final;
          if (std::string(col) == "fid_val_final") v = row.fid_val_final;
          if (std::string(col) == "renyi_hidden_final") v = row.renyi_hidden_final;
          if (std::string(col) == "renyi_output_final") v = row.renyi_output_final;
          s.y.push_back(v);
        }
        fid_series.push_back(std::move(s));
      }
    }
  }

  const bool is_sweep = runs.size() == 1 && runs[0].kind == "sweep";
  const std::string chart_path =
      (fs::path(out) / (name + ".svg")).string();
  write_svg_chart(chart_path, fid_series, is_sweep ? "p" : "iteration",
                  is_sweep ? "value" : "fidelity");
  written.push_back(chart_path);
  return written;
}

GradCheckReport cmd_gradient_check(const RunConfig& config, int points) {
  validate_config(config);
  if (points < 1) throw std::runtime_error("gradient-check: points must be >= 1");
  const ArchitectureSpec arch =
      build_architecture(config.arch_name, config.m, config.model);

  // A small mixed dataset exercises averaging without inflating runtime.
  Rng data_rng(derive_seed(config.seed, 1));
  const int n_pairs = std::min(config.n_train, 3);
  DataSet data = make_training_set(config.m, config.p_train, n_pairs, data_rng);

  GradCheckReport report;
  report.points = points;
  report.per_slot_max.assign(arch.n_slots, 0.0);
  Rng point_rng(derive_seed(config.seed, 3));
  for (int k = 0; k < points; ++k) {
    const ParamVector params = random_params(arch.n_slots, point_rng);
    const ParamVector shift = grad_param_shift(arch, params, data);
    const ParamVector fd = grad_finite_diff(arch, params, data, config.fd_step);
    for (int s = 0; s < arch.n_slots; ++s) {
      const double err = std::abs(shift[s] - fd[s]);
      report.per_slot_max[s] = std::max(report.per_slot_max[s], err);
      report.max_abs_err = std::max(report.max_abs_err, err);
    }
  }
  report.pass = report.max_abs_err <= report.tolerance;
  return report;
}

}  // namespace qae
