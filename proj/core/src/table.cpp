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

#include "qdl/table.hpp"

#include <cmath>
#include <stdexcept>

namespace qdl {

void GridSpec::check() const {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument(name + ": non-finite range");
  if (count == 1 && lo == hi) return;
  if (count < 2) throw std::invalid_argument(name + ": grid needs at least 2 points");
  if (!(hi > lo)) throw std::invalid_argument(name + ": range must be ordered lo < hi");
}

std::vector<double> GridSpec::values() const {
  check();
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) out[k] = lo + step * static_cast<double>(k);
  out.back() = hi;
  return out;
}

}  // namespace qdl
