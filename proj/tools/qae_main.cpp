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

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qae/runner.hpp"
#include "qae/svg.hpp"

namespace {

// Exit codes: 0 success, 1 usage/config error, 2 gradient-check failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct CommonOpts {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
};

qae::RunConfig resolve_run_config(const CommonOpts& opts) {
  qae::RunConfig config;
  if (!opts.config_path.empty()) config = qae::parse_config(opts.config_path);
  if (opts.seed) config.seed = *opts.seed;
  if (opts.out_dir) config.out_dir = *opts.out_dir;
  qae::validate_config(config);
  return config;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "Config file (key = value lines)");
  cmd->add_option("--seed", opts.seed, "Master seed override");
  cmd->add_option("--out", opts.out_dir, "Output directory override");
}

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissipative-QNN quantum autoencoder: training, sweeps and paper presets"};
  app.require_subcommand(1);

  CommonOpts train_opts;
  CLI::App* train = app.add_subcommand("train", "Train one run, emit CSV + params + meta");
  add_common(train, train_opts);

  CommonOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "Noise-tolerance sweep over p values");
  add_common(sweep, sweep_opts);

  CommonOpts preset_opts;
  std::string preset_name;
  bool list_presets = false;
  CLI::App* preset = app.add_subcommand("preset", "Run a named experiment");
  preset->add_option("name", preset_name, "Preset name");
  preset->add_flag("--list", list_presets, "List available presets");
  preset->add_option("--seed", preset_opts.seed, "Master seed override");
  preset->add_option("--out", preset_opts.out_dir, "Output directory override");

  CommonOpts check_opts;
  int check_points = 10;
  CLI::App* check = app.add_subcommand(
      "gradient-check", "Compare parameter-shift and finite-difference gradients");
  add_common(check, check_opts);
  check->add_option("--points", check_points, "Random parameter points")
      ->check(CLI::PositiveNumber);

  std::string plot_csv, plot_cols, plot_out;
  CLI::App* plot = app.add_subcommand("plot", "Render CSV columns as an SVG line chart");
  plot->add_option("--csv", plot_csv, "Input CSV path")->required();
  plot->add_option("--cols", plot_cols, "Comma-separated column names")->required();
  plot->add_option("--out", plot_out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train) {
      const qae::RunConfig config = resolve_run_config(train_opts);
      // Qubit labels are printed 1-based, matching the usual circuit diagrams.
      const int n = 2 * config.m + 1;
      std::cout << "training " << config.arch_name << " on q1..q" << n
                << " (inputs q1-q" << config.m << ", bottleneck q" << config.m + 1
                << ", outputs q" << config.m + 2 << "-q" << n << ")\n";
      const qae::RunResult result = qae::cmd_train(config);
      std::cout << "wrote " << result.csv_path << "\n";
      std::cout << "wrote " << result.params_path << "\n";
      std::cout << "wrote " << result.meta_path << "\n";
      return kExitOk;
    }
    if (*sweep) {
      qae::SweepConfig config;
      if (!sweep_opts.config_path.empty()) {
        config = qae::parse_sweep_config(sweep_opts.config_path);
      } else {
        config.p_values = qae::default_sweep_grid();
      }
      if (sweep_opts.seed) config.base.seed = *sweep_opts.seed;
      if (sweep_opts.out_dir) config.base.out_dir = *sweep_opts.out_dir;
      qae::validate_config(config.base);
      const qae::SweepResult result = qae::cmd_sweep(config);
      std::cout << "wrote " << result.csv_path << "\n";
      std::cout << "wrote " << result.meta_path << "\n";
      return kExitOk;
    }
    if (*preset) {
      if (list_presets) {
        for (const std::string& name : qae::preset_names()) std::cout << name << "\n";
        return kExitOk;
      }
      if (preset_name.empty()) {
        std::cerr << "preset: name required (or --list)\n";
        return kExitUsage;
      }
      const auto written =
          qae::cmd_preset(preset_name, preset_opts.seed, preset_opts.out_dir);
      for (const std::string& path : written) std::cout << "wrote " << path << "\n";
      return kExitOk;
    }
    if (*check) {
      const qae::RunConfig config = resolve_run_config(check_opts);
      const qae::GradCheckReport report = qae::cmd_gradient_check(config, check_points);
      std::cout << "architecture " << config.arch_name << " m=" << config.m;
      if (config.model != 0) std::cout << " model=" << config.model;
      std::cout << ", " << report.points << " random points\n";
      for (std::size_t s = 0; s < report.per_slot_max.size(); ++s) {
        std::cout << "slot " << s << " max |shift - fd| = "
                  << qae::format_double(report.per_slot_max[s]) << "\n";
      }
      std::cout << "max abs error " << qae::format_double(report.max_abs_err)
                << " (tolerance " << qae::format_double(report.tolerance) << "): "
                << (report.pass ? "PASS" : "FAIL") << "\n";
      return report.pass ? kExitOk : kExitCheckFailed;
    }
    if (*plot) {
      qae::emit_plot(plot_csv, split_csv_list(plot_cols), plot_out);
      std::cout << "wrote " << plot_out << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
