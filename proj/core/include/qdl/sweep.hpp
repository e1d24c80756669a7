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

#include <string>
#include <vector>

#include "qdl/table.hpp"

namespace qdl {

enum class Observable {
  kInversion,
  kInversionEq10,
  kExcitedPopulation,
  kCoherence,
  kCoherentWeight,
  kIncoherentPower,
  kVarXNormal,
  kVarYNormal,
  kVarXNormalPaper,
  kCentralPeakHeight,
  kCentralPeakFwhm,
  kSidebandPeakFwhm,
  kG2,
};

/// Throws std::invalid_argument for unknown names.
Observable parse_observable(const std::string& name);
std::string observable_name(Observable obs);
/// Column header including units.
std::string observable_column(Observable obs);
std::vector<std::string> observable_names();

struct SweepConfig {
  Observable observable = Observable::kInversion;
  GridSpec omega{"omega", 0.0, 6.0, 61};
  GridSpec nbar{"nbar", 0.0, 1.0, 21};
  double gamma = 1.0;
  /// Delay for the g2 observable.
  double tau = 1.0;
  /// 0 means use thread_cap().
  unsigned threads = 0;
};

/// Parallelism limit: QDL_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
unsigned thread_cap();

/// One row per (omega, nbar) pair, omega index outer, nbar inner. Rows are computed
/// in parallel; the result is independent of the thread count.
Table run_sweep(const SweepConfig& config);

double observe(Observable obs, double omega, double gamma, double nbar, double tau);

}  // namespace qdl
