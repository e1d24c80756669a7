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

#include <vector>

#include "qdl/params.hpp"

namespace qdl {

/// Which steady-state expressions feed the quadrature variances: the exact fixed
/// point, or the printed inversion (-1/[(1+2n)(2 omega^2 + 1)]) and printed
/// coherence (omega gamma^2 / 2 alpha beta), both in gamma = 1 units.
enum class FormulaPath { kCorrected, kPaperVerbatim };

const char* to_string(FormulaPath path);

/// Normal-ordered dipole quadrature variances at steady state.
/// var_x = (1 + <sigma_z>)/2 - 2 <sigma_+>^2, var_y = (1 + <sigma_z>)/2.
struct QuadratureReport {
  double var_x_normal = 0.0;
  double var_y_normal = 0.0;
  bool squeezed = false;
};

QuadratureReport quadrature_variances(const SystemParams& params,
                                      FormulaPath path = FormulaPath::kCorrected);

struct OmegaInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Drive intervals in [omega_lo, omega_hi] with var_x_normal < 0. Sign changes are
/// bracketed on a grid of spacing `resolution` and the endpoints bisected to 1e-8.
std::vector<OmegaInterval> squeezing_scan(double nbar, double omega_lo, double omega_hi,
                                          double resolution,
                                          FormulaPath path = FormulaPath::kCorrected,
                                          double gamma = 1.0);

/// Full (not normal-ordered) variances and the sigma_x/sigma_y uncertainty bound
/// C = |<sigma_z>|/2 from [sigma_x, sigma_y] = i sigma_z.
struct UncertaintyRecord {
  double var_x_full = 0.0;
  double var_y_full = 0.0;
  double var_x_normal = 0.0;
  double var_y_normal = 0.0;
  double bound = 0.0;
  double product = 0.0;
};

class UncertaintyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws UncertaintyViolation if a full variance is negative or the product falls
/// below bound^2 (beyond rounding); either indicates a bug, not physics.
UncertaintyRecord uncertainty_check(const BlochVector& state);
UncertaintyRecord uncertainty_check(const SystemParams& params);

}  // namespace qdl
