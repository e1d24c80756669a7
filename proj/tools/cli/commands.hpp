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

#include "qdl/params.hpp"
#include "qdl/sweep.hpp"

namespace qdl::cli {

inline constexpr const char* kVersion = QDL_VERSION;

struct RunConfig {
  std::string command;  ///< steady | dynamics | spectrum | g2 | squeezing | figure | verify | sweep
  SystemParams params{1.0, 1.0, 0.0};
  double tau_max = 10.0;
  double omega_window = 0.0;  ///< 0 selects a command-specific default
  std::size_t points = 301;
  std::string out;  ///< empty writes data to stdout and skips the sidecar
  std::string format = "csv";
  bool plot = false;
  bool strict_paper = false;
  bool quick = false;
  int figure = 0;
  std::string init = "ground";  ///< dynamics: ground | excited | mixed
  SweepConfig sweep;
};

/// Parses "lo:hi:count" (or a single value, a one-point grid).
GridSpec parse_grid(const std::string& name, const std::string& text);

/// Executes one command. Returns the process exit status: 0 success, 1 a failed
/// verification check, 2 bad input or I/O failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qdl::cli
