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

#include "qae/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qae {

std::string format_double(double value) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

void write_history_csv(const std::string& path,
                       const std::vector<IterationRecord>& records) {
  std::ostringstream os;
  os << "iter,cost_train,fid_train_clean,fid_val,renyi_hidden,renyi_output\n";
  for (const IterationRecord& r : records) {
    os << r.iter << ',' << format_double(r.cost_train) << ','
       << format_double(r.fid_train_clean) << ',' << format_double(r.fid_val) << ','
       << format_double(r.renyi_hidden) << ',' << format_double(r.renyi_output)
       << '\n';
  }
  write_text_file(path, os.str());
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "p,fid_train_final,fid_val_final,renyi_hidden_final,renyi_output_final\n";
  for (const SweepRow& r : rows) {
    os << format_double(r.p) << ',' << format_double(r.fid_train_final) << ','
       << format_double(r.fid_val_final) << ',' << format_double(r.renyi_hidden_final)
       << ',' << format_double(r.renyi_output_final) << '\n';
  }
  write_text_file(path, os.str());
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::runtime_error("csv: missing column '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) table.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      values.push_back(std::strtod(cell.c_str(), nullptr));
    }
    if (values.size() != table.columns.size()) {
      throw std::runtime_error("csv: ragged row in " + path);
    }
    table.rows.push_back(std::move(values));
  }
  return table;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace qae
