// Copyright 2026 The geomgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geomgate/csv.hpp"

#include <cmath>
#include <system_error>

#include <fmt/core.h>

#include "geomgate/quantum_core.hpp"

namespace geomgate {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  return fmt::format("{:.17g}", v);
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : path_(path) {
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
    if (ec) {
      throw Error(fmt::format("cannot create directory for {}: {}", path_.string(),
                              ec.message()));
    }
  }
  out_.open(path_, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!out_) throw Error(fmt::format("cannot open {} for writing", path_.string()));
}

void CsvWriter::comment(std::string_view text) {
  out_ << "# " << text << '\n';
  check();
}

void CsvWriter::header(std::string_view columns) {
  out_ << columns << '\n';
  check();
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::vector<double>(values));
}

void CsvWriter::row(const std::vector<double>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format_number(values[i]);
  }
  out_ << line << '\n';
  check();
}

void CsvWriter::row(std::string_view label, const std::vector<double>& values) {
  std::string line(label);
  for (double v : values) {
    line += ',';
    line += format_number(v);
  }
  out_ << line << '\n';
  check();
}

void CsvWriter::close() {
  out_.flush();
  check();
  out_.close();
}

void CsvWriter::check() {
  if (!out_) throw Error(fmt::format("write to {} failed", path_.string()));
}

}  // namespace geomgate
