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

#include "cli/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qdl::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << format_double(row[c]);
    }
    os << '\n';
  }
}

nlohmann::json table_to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) rows.push_back(row);
  return {{"columns", table.columns}, {"rows", rows}};
}

nlohmann::json grid_to_json(const GridSpec& grid) {
  return {{"name", grid.name}, {"lo", grid.lo}, {"hi", grid.hi}, {"count", grid.count}};
}

std::string plot_script(const Table& table, const std::string& csv_name, const std::string& title,
                        bool surface) {
  std::ostringstream os;
  os << "# gnuplot script\n";
  os << "set datafile separator ','\n";
  os << "set key autotitle columnhead\n";
  os << "set title '" << title << "'\n";
  if (!table.columns.empty()) os << "set xlabel '" << table.columns[0] << "'\n";
  if (surface && table.columns.size() >= 3) {
    os << "set ylabel '" << table.columns[1] << "'\n";
    os << "splot '" << csv_name << "' using 1:2:3 with points pointtype 7 pointsize 0.4\n";
  } else {
    os << "plot";
    for (std::size_t c = 1; c < table.columns.size(); ++c) {
      os << (c == 1 ? " " : ", \\\n     ") << "'" << csv_name << "' using 1:" << c + 1
         << " with lines";
    }
    os << '\n';
  }
  os << "pause -1\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace qdl::cli
