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

#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace geomgate {

/// Locale-independent shortest round-trip-safe rendering ("{:.17g}" with
/// non-finite values written as nan/inf).
std::string format_number(double v);

/// Line-oriented CSV writer. Comment lines start with "# ".
class CsvWriter {
 public:
  /// Opens `path` for writing (creating parent directories). Throws Error
  /// naming the path on failure.
  explicit CsvWriter(const std::filesystem::path& path);

  void comment(std::string_view text);
  void header(std::string_view columns);
  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);
  /// Row with a leading text cell.
  void row(std::string_view label, const std::vector<double>& values);

  /// Flushes and checks the stream; throws Error naming the path on failure.
  void close();

  const std::filesystem::path& path() const { return path_; }

 private:
  void check();

  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace geomgate
