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

#include <cstddef>
#include <string>
#include <vector>

#include "qdl/params.hpp"
#include "qdl/squeezing.hpp"
#include "qdl/table.hpp"

namespace qdl {

struct FigureOptions {
  bool strict_paper = false;
  std::size_t points = 301;
  double tau_max = 10.0;
  /// Half-width of the omega axis for spectra; 0 selects 2*omega + 10*gamma.
  double omega_window = 0.0;
};

struct FigureData {
  int number = 0;
  std::string title;
  FormulaPath path = FormulaPath::kCorrected;
  std::vector<SystemParams> params;
  std::vector<GridSpec> grids;
  std::vector<std::string> notes;
  Table table;
};

inline constexpr int kFigureCount = 9;

/// Data behind figure n (1..9). Throws std::out_of_range for other n.
FigureData figure(int n, const FigureOptions& options = {});

}  // namespace qdl
