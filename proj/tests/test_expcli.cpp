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

#include <filesystem>
#include <fstream>
#include <string>

#include "qae/runner.hpp"
#include "qae/svg.hpp"

using namespace qae;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) {
    path = fs::temp_directory_path() / name;
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_file(const TempDir& dir, const std::string& name,
                       const std::string& content) {
  const std::string path = dir.file(name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

// Minimal well-formedness scan: every opened tag is closed in order.
bool markup_is_balanced(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;  // self-closing
    if (tag[0] == '/') {
      if (stack.empty()) return false;
      if (stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else {
      const std::size_t space = tag.find_first_of(" \t\n");
      stack.push_back(space == std::string::npos ? tag : tag.substr(0, space));
    }
  }
  return stack.empty();
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

RunConfig tiny_run_config(const std::string& out_dir) {
  RunConfig config;
  config.arch_name = "qae_conj";
  config.m = 2;
  config.p_train = 0.2;
  config.p_val_max = 0.2;
  config.n_train = 2;
  config.n_val = 2;
  config.iterations = 2;
  config.seed = 9;
  config.out_dir = out_dir;
  return config;
}

}  // namespace

TEST_CASE("empty config file yields the documented defaults") {
  TempDir dir("qae_cfg_test");
  const std::string path = write_file(dir, "empty.cfg", "");
  const RunConfig c = parse_config(path);
  CHECK(c.arch_name == "qae_nisq");
  CHECK(c.m == 2);
  CHECK(c.model == 0);
  CHECK(c.p_train == 0.2);
  CHECK(c.n_train == 30);
  CHECK(c.n_val == 30);
  CHECK(c.learning_rate == 0.4);
  CHECK(c.iterations == 100);
  CHECK(c.grad_method == GradMethod::param_shift);
  CHECK(c.init == InitKind::uniform);
}

TEST_CASE("config parse errors") {
  TempDir dir("qae_cfg_err");
  CHECK_THROWS_AS((void)parse_config(write_file(dir, "a.cfg", "learning_rate = -1\n")),
                  std::runtime_error);
  CHECK_THROWS_AS((void)parse_config(write_file(dir, "b.cfg", "who = knows\n")),
                  std::runtime_error);
  CHECK_THROWS_AS((void)parse_config(write_file(dir, "c.cfg", "p_train = 1.5\n")),
                  std::runtime_error);
  CHECK_THROWS_AS((void)parse_config(write_file(dir, "d.cfg", "no equals sign\n")),
                  std::runtime_error);
  CHECK_THROWS_AS((void)parse_config(write_file(dir, "e.cfg", "m = x\n")),
                  std::runtime_error);
  CHECK_THROWS_AS((void)parse_config(dir.file("missing.cfg")), std::runtime_error);
  // model is required exactly for the modified decoder
  CHECK_THROWS_AS(
      (void)parse_config(write_file(dir, "f.cfg", "arch = qae_conj_mod_dec\n")),
      std::runtime_error);
  CHECK_THROWS_AS((void)parse_config(write_file(dir, "g.cfg", "model = 2\n")),
                  std::runtime_error);
}

TEST_CASE("config round trip through serialize/parse") {
  TempDir dir("qae_cfg_rt");
  RunConfig c;
  c.arch_name = "qae_conj_mod_dec";
  c.m = 3;
  c.model = 2;
  c.p_train = 0.35;
  c.p_val_max = 0.15;
  c.n_train = 12;
  c.n_val = 7;
  c.learning_rate = 0.25;
  c.iterations = 42;
  c.grad_method = GradMethod::finite_diff;
  c.fd_step = 1e-4;
  c.init = InitKind::warm_start;
  c.warm_steps = 5;
  c.warm_sigma = 0.2;
  c.seed = 12345;
  c.out_dir = "somewhere/else";
  const std::string path = write_file(dir, "rt.cfg", serialize_config(c));
  const RunConfig back = parse_config(path);
  CHECK(back.arch_name == c.arch_name);
  CHECK(back.m == c.m);
  CHECK(back.model == c.model);
  CHECK(back.p_train == c.p_train);
  CHECK(back.p_val_max == c.p_val_max);
  CHECK(back.n_train == c.n_train);
  CHECK(back.n_val == c.n_val);
  CHECK(back.learning_rate == c.learning_rate);
  CHECK(back.iterations == c.iterations);
  CHECK(back.grad_method == c.grad_method);
  CHECK(back.fd_step == c.fd_step);
  CHECK(back.init == c.init);
  CHECK(back.warm_steps == c.warm_steps);
  CHECK(back.warm_sigma == c.warm_sigma);
  CHECK(back.seed == c.seed);
  CHECK(back.out_dir == c.out_dir);
}

TEST_CASE("sweep config parsing") {
  TempDir dir("qae_sweep_cfg");
  const std::string path = write_file(dir, "s.cfg",
                                      "arch = qae_conj\n"
                                      "p_values = 0, 0.1, 0.2\n"
                                      "iterations_at_eval = 5\n");
  const SweepConfig s = parse_sweep_config(path);
  CHECK(s.p_values == std::vector<double>{0.0, 0.1, 0.2});
  CHECK(s.iterations_at_eval == 5);
  CHECK(s.base.arch_name == "qae_conj");

  // Sweep keys are rejected by the plain run parser.
  CHECK_THROWS_AS((void)parse_config(path), std::runtime_error);

  const SweepConfig defaults =
      parse_sweep_config(write_file(dir, "d.cfg", "arch = qae_nisq\n"));
  CHECK(defaults.p_values.size() == 11);
  CHECK(defaults.p_values.front() == 0.0);
  CHECK(defaults.p_values.back() == doctest::Approx(0.5));
  CHECK(defaults.iterations_at_eval == 50);
}

TEST_CASE("format_double round-trips cleanly") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.05) == "0.05");
  CHECK(format_double(1.0) == "1");
  for (double v : {0.1, 1.0 / 3.0, 0.9999999999999999, 1e-17, 123456.789}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("cmd_train writes the documented CSV schema deterministically") {
  TempDir dir("qae_train_cmd");
  const RunConfig config = tiny_run_config(dir.str());
  const RunResult result = cmd_train(config);

  const std::string csv = read_text_file(result.csv_path);
  CHECK(csv.rfind("iter,cost_train,fid_train_clean,fid_val,renyi_hidden,renyi_output\n",
                  0) == 0);
  CHECK(count_occurrences(csv, "\n") == 4);  // header + 3 records (iters=2)
  CHECK(csv.find("\r") == std::string::npos);

  // Byte-identical rerun.
  const RunResult again = cmd_train(config);
  CHECK(read_text_file(again.csv_path) == csv);

  // CSV values parse back to exactly the in-memory history.
  const CsvTable table = read_csv(result.csv_path);
  REQUIRE(table.rows.size() == result.history.records.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const IterationRecord& r = result.history.records[i];
    CHECK(table.rows[i][0] == static_cast<double>(r.iter));
    CHECK(table.rows[i][1] == r.cost_train);
    CHECK(table.rows[i][2] == r.fid_train_clean);
    CHECK(table.rows[i][3] == r.fid_val);
    CHECK(table.rows[i][4] == r.renyi_hidden);
    CHECK(table.rows[i][5] == r.renyi_output);
  }

  // Meta sidecar records the resolved run.
  const std::string meta = read_text_file(result.meta_path);
  CHECK(meta.find("seed = 9") != std::string::npos);
  CHECK(meta.find("derived_train_set_seed = ") != std::string::npos);
  CHECK(meta.find("depolarizing_convention = ") != std::string::npos);
  CHECK(meta.find("n_slots = 12") != std::string::npos);

  // Params file loads against the right architecture.
  const ParamsFile params = load_params(result.params_path);
  CHECK(params.name == "qae_conj");
  CHECK(params.n_slots == 12);
  CHECK((params.values - result.history.final_params).norm() == 0.0);
}

TEST_CASE("cmd_sweep emits one row per p with distinct sub-seeds") {
  TempDir dir("qae_sweep_cmd");
  SweepConfig sweep;
  sweep.base = tiny_run_config(dir.str());
  sweep.base.arch_name = "qae_conj_mod_dec";
  sweep.base.model = 3;
  sweep.base.init = InitKind::warm_start;
  sweep.p_values = {0.0, 0.1};
  sweep.iterations_at_eval = 40;
  const SweepResult result = cmd_sweep(sweep);

  REQUIRE(result.rows.size() == 2);
  const std::string csv = read_text_file(result.csv_path);
  CHECK(csv.rfind("p,fid_train_final,fid_val_final,renyi_hidden_final,"
                  "renyi_output_final\n",
                  0) == 0);
  // Noise-free training of the modified decoder converges near 1.
  CHECK(result.rows[0].p == 0.0);
  CHECK(result.rows[0].fid_val_final > 0.95);
  CHECK(derive_seed(sweep.base.seed, 1000) != derive_seed(sweep.base.seed, 1001));
}

TEST_CASE("preset plans carry the paper-caption hyperparameters") {
  const auto plan = preset_plan("212-compare", 42, "outdir");
  REQUIRE(plan.size() == 2);
  CHECK(plan[0].config.arch_name == "qae_nisq");
  CHECK(plan[1].config.arch_name == "qae_conj");
  for (const PresetRun& run : plan) {
    CHECK(run.config.m == 2);
    CHECK(run.config.p_train == 0.2);
    CHECK(run.config.p_val_max == 0.2);
    CHECK(run.config.n_train == 30);
    CHECK(run.config.learning_rate == 0.4);
    CHECK(run.config.iterations == 100);
    CHECK(run.config.init == InitKind::warm_start);
  }
  CHECK(plan[0].config.seed != plan[1].config.seed);

  const auto models = preset_plan("313-models", 42, "outdir");
  REQUIRE(models.size() == 4);
  CHECK(models[0].config.arch_name == "qae_nisq");
  CHECK(models[1].config.arch_name == "qae_conj");
  CHECK(models[2].config.model == 2);
  CHECK(models[3].config.model == 3);
  for (const PresetRun& run : models) CHECK(run.config.m == 3);

  const auto sweep = preset_plan("212-noise-sweep", 7, "outdir");
  REQUIRE(sweep.size() == 1);
  CHECK(sweep[0].kind == "sweep");
  CHECK(sweep[0].sweep_iterations == 50);

  CHECK_THROWS_WITH_AS((void)preset_plan("no-such-thing", 1, "x"),
                       doctest::Contains("available:"), std::runtime_error);
  CHECK(preset_names().size() == 7);
}

TEST_CASE("gradient check command reports pass and fail") {
  RunConfig config;
  config.arch_name = "qae_conj";
  config.m = 2;
  config.seed = 3;
  const GradCheckReport good = cmd_gradient_check(config, 2);
  CHECK(good.pass);
  CHECK(good.max_abs_err < 1e-6);
  CHECK(good.per_slot_max.size() == 12);

  // Negative control: a far-too-coarse difference step breaks the agreement.
  RunConfig coarse = config;
  coarse.fd_step = 0.5;
  const GradCheckReport bad = cmd_gradient_check(coarse, 2);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("emit_plot renders one polyline per column with the affine mapping") {
  TempDir dir("qae_svg");
  const std::string csv_path = dir.file("data.csv");
  write_text_file(csv_path,
                  "iter,a,b\n"
                  "0,0.1,1\n"
                  "1,0.4,0.5\n"
                  "2,0.2,0\n");
  const std::string svg_path = dir.file("chart.svg");
  emit_plot(csv_path, {"a", "b"}, svg_path);

  const std::string svg = read_text_file(svg_path);
  CHECK(markup_is_balanced(svg));
  CHECK(count_occurrences(svg, "<polyline") == 2);
  CHECK(svg.find("<svg") != std::string::npos);

  // Recompute the y mapping: data range is [0, 1] -> [470, 30].
  // y(0.1) = 470 + 0.1 * (30 - 470) = 426.
  const std::size_t first = svg.find("points=\"");
  REQUIRE(first != std::string::npos);
  const std::size_t end = svg.find('"', first + 8);
  const std::string points = svg.substr(first + 8, end - first - 8);
  CHECK(points.rfind("70.00,426.00", 0) == 0);

  CHECK_THROWS_AS(emit_plot(csv_path, {"missing"}, svg_path), std::runtime_error);

  // Two-row CSV: each series is exactly one segment (two points).
  const std::string csv2 = dir.file("two.csv");
  write_text_file(csv2, "iter,a\n0,0.25\n1,0.75\n");
  const std::string svg2_path = dir.file("two.svg");
  emit_plot(csv2, {"a"}, svg2_path);
  const std::string svg2 = read_text_file(svg2_path);
  const std::size_t p2 = svg2.find("points=\"");
  REQUIRE(p2 != std::string::npos);
  const std::string pts = svg2.substr(p2 + 8, svg2.find('"', p2 + 8) - p2 - 8);
  CHECK(count_occurrences(pts, " ") == 1);  // two coordinate pairs
}
