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

#include <string>
#include <vector>

#include "qae/metrics.hpp"

// CSV emission and parsing. All output is locale-independent: '.' decimal
// separator, fixed column order, '\n' line endings.

namespace qae {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

void write_history_csv(const std::string& path,
                       const std::vector<IterationRecord>& records);

struct SweepRow {
  double p = 0.0;
  double fid_train_final = 0.0;
  double fid_val_final = 0.0;
  double renyi_hidden_final = 0.0;
  double renyi_output_final = 0.0;
};

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws std::runtime_error if missing.
  std::size_t column_index(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace qae
