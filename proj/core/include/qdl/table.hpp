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

namespace qdl {

/// Evenly spaced grid lo..hi with `count` points (count == 1 requires lo == hi).
struct GridSpec {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 2;

  /// Throws std::invalid_argument unless count >= 2 with lo < hi, or a single point.
  void check() const;
  std::vector<double> values() const;
};

/// Column-labelled numeric table; column names carry units, e.g. "omega [gamma]".
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

}  // namespace qdl
