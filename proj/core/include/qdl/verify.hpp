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

namespace qdl {

struct VerifyOptions {
  bool quick = false;
  /// Adds per-nbar detail to the printed-formula findings.
  bool strict_paper = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// A place where a printed formula disagrees with the exact solution. Informational.
struct Finding {
  std::string id;
  std::string summary;
  double printed = 0.0;
  double exact = 0.0;
  double ratio = 0.0;
  std::vector<std::string> detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<Finding> findings;

  bool ok() const;
};

/// Analytic-vs-oracle grid, sum rules, squeezing extrema and the printed-formula
/// findings. Default grid: omega in {0, 0.5, 1, 2, 5, 10} x nbar in {0, 0.25, 0.5, 0.75};
/// quick: omega in {0, 1, 5} x nbar in {0, 0.5}.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace qdl
