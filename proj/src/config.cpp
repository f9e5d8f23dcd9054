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

#include "qae/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qae/io.hpp"

namespace qae {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("config error: " + what);
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    fail(key + ": not an integer: '" + value + "'");
  }
  if (used != value.size()) fail(key + ": trailing characters in '" + value + "'");
  return v;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    fail(key + ": not a number: '" + value + "'");
  }
  if (used != value.size()) fail(key + ": trailing characters in '" + value + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    fail(key + ": not an unsigned integer: '" + value + "'");
  }
  if (used != value.size()) fail(key + ": trailing characters in '" + value + "'");
  return v;
}

double parse_probability(const std::string& key, const std::string& value) {
  const double p = parse_double(key, value);
  if (p < 0.0 || p > 1.0) fail(key + ": probability outside [0,1]");
  return p;
}

std::vector<double> parse_p_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::istringstream is(value);
  std::string item;
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(key + ": empty list entry");
    out.push_back(parse_probability(key, item));
  }
  if (out.empty()) fail(key + ": empty list");
  return out;
}

// Applies one key to the configs; sweep keys only when sweep != nullptr.
void apply_key(const std::string& key, const std::string& value, RunConfig& c,
               SweepConfig* sweep) {
  if (key == "arch") {
    if (value != "qae_nisq" && value != "qae_conj" && value != "qae_conj_mod_dec") {
      fail("arch: unknown architecture '" + value + "'");
    }
    c.arch_name = value;
  } else if (key == "m") {
    const long long m = parse_int(key, value);
    if (m < 2 || m > 8) fail("m: must be in [2, 8]");
    c.m = static_cast<int>(m);
  } else if (key == "model") {
    const long long v = parse_int(key, value);
    if (v < 1 || v > 3) fail("model: must be 1, 2 or 3");
    c.model = static_cast<int>(v);
  } else if (key == "p_train") {
    c.p_train = parse_probability(key, value);
  } else if (key == "p_val_max") {
    c.p_val_max = parse_probability(key, value);
  } else if (key == "n_train") {
    const long long v = parse_int(key, value);
    if (v < 1) fail("n_train: must be >= 1");
    c.n_train = static_cast<int>(v);
  } else if (key == "n_val") {
    const long long v = parse_int(key, value);
    if (v < 1) fail("n_val: must be >= 1");
    c.n_val = static_cast<int>(v);
  } else if (key == "learning_rate") {
    c.learning_rate = parse_double(key, value);
    if (c.learning_rate <= 0.0) fail("learning_rate: must be > 0");
  } else if (key == "iterations") {
    const long long v = parse_int(key, value);
    if (v < 1) fail("iterations: must be >= 1");
    c.iterations = static_cast<int>(v);
  } else if (key == "grad_method") {
    if (value == "param_shift") {
      c.grad_method = GradMethod::param_shift;
    } else if (value == "finite_diff") {
      c.grad_method = GradMethod::finite_diff;
    } else {
      fail("grad_method: expected param_shift or finite_diff");
    }
  } else if (key == "fd_step") {
    c.fd_step = parse_double(key, value);
    if (c.fd_step <= 0.0) fail("fd_step: must be > 0");
  } else if (key == "init") {
    if (value == "uniform") {
      c.init = InitKind::uniform;
    } else if (value == "warm_start") {
      c.init = InitKind::warm_start;
    } else if (value == "transfer") {
      c.init = InitKind::transfer;
    } else {
      fail("init: expected uniform, warm_start or transfer");
    }
  } else if (key == "warm_steps") {
    const long long v = parse_int(key, value);
    if (v != -1 && v < 1) fail("warm_steps: must be -1 or >= 1");
    c.warm_steps = static_cast<int>(v);
  } else if (key == "transfer_iterations") {
    const long long v = parse_int(key, value);
    if (v < 1) fail("transfer_iterations: must be >= 1");
    c.transfer_iterations = static_cast<int>(v);
  } else if (key == "warm_sigma") {
    c.warm_sigma = parse_double(key, value);
    if (c.warm_sigma < 0.0) fail("warm_sigma: must be >= 0");
  } else if (key == "seed") {
    c.seed = parse_u64(key, value);
  } else if (key == "out_dir") {
    if (value.empty()) fail("out_dir: empty path");
    c.out_dir = value;
  } else if (sweep != nullptr && key == "p_values") {
    sweep->p_values = parse_p_list(key, value);
  } else if (sweep != nullptr && key == "iterations_at_eval") {
    const long long v = parse_int(key, value);
    if (v < 1) fail("iterations_at_eval: must be >= 1");
    sweep->iterations_at_eval = static_cast<int>(v);
  } else {
    fail("unknown key '" + key + "'");
  }
}

void parse_file(const std::string& path, RunConfig& c, SweepConfig* sweep) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      fail(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) fail(path + ":" + std::to_string(line_no) + ": empty key");
    apply_key(key, value, c, sweep);
  }
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (config.arch_name == "qae_conj_mod_dec") {
    if (config.model < 1 || config.model > 3) {
      fail("model: required (1..3) for arch qae_conj_mod_dec");
    }
  } else if (config.model != 0) {
    fail("model: only valid for arch qae_conj_mod_dec");
  }
}

RunConfig parse_config(const std::string& path) {
  RunConfig c;
  parse_file(path, c, nullptr);
  validate_config(c);
  return c;
}

SweepConfig parse_sweep_config(const std::string& path) {
  SweepConfig s;
  s.p_values = default_sweep_grid();
  parse_file(path, s.base, &s);
  validate_config(s.base);
  return s;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "arch = " << c.arch_name << "\n";
  os << "m = " << c.m << "\n";
  if (c.model != 0) os << "model = " << c.model << "\n";
  os << "p_train = " << format_double(c.p_train) << "\n";
  os << "p_val_max = " << format_double(c.p_val_max) << "\n";
  os << "n_train = " << c.n_train << "\n";
  os << "n_val = " << c.n_val << "\n";
  os << "learning_rate = " << format_double(c.learning_rate) << "\n";
  os << "iterations = " << c.iterations << "\n";
  os << "grad_method = "
     << (c.grad_method == GradMethod::param_shift ? "param_shift" : "finite_diff")
     << "\n";
  os << "fd_step = " << format_double(c.fd_step) << "\n";
  const char* init_name = c.init == InitKind::uniform ? "uniform"
                          : c.init == InitKind::warm_start ? "warm_start"
                                                           : "transfer";
  os << "init = " << init_name << "\n";
  os << "warm_steps = " << c.warm_steps << "\n";
  os << "warm_sigma = " << format_double(c.warm_sigma) << "\n";
  os << "transfer_iterations = " << c.transfer_iterations << "\n";
  os << "seed = " << c.seed << "\n";
  os << "out_dir = " << c.out_dir << "\n";
  return os.str();
}

std::vector<double> default_sweep_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.05 * i);
  return grid;
}

}  // namespace qae
