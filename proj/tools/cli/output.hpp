// Copyright 2026 The qdl Authors
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

#include <ostream>
#include <string>

#include <json.hpp>

#include "qdl/table.hpp"

namespace qdl::cli {

/// Shortest text that round-trips: 17 significant digits, '.' decimal.
std::string format_double(double value);

/// Header row then one line per row, comma separated, '\n' line endings.
void write_csv(const Table& table, std::ostream& os);

nlohmann::json table_to_json(const Table& table);
nlohmann::json grid_to_json(const GridSpec& grid);

/// gnuplot script plotting `csv_name` (relative path): one curve per column after
/// the first, or a surface when `surface` is set (x, y, z columns).
std::string plot_script(const Table& table, const std::string& csv_name, const std::string& title,
                        bool surface);

/// Writes `content` to `path`; throws std::runtime_error if the file cannot be written.
void write_file(const std::string& path, const std::string& content);

}  // namespace qdl::cli
