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

#include "qdl/squeezing.hpp"

#include <cmath>
#include <stdexcept>

#include "qdl/dynamics.hpp"

namespace qdl {

const char* to_string(FormulaPath path) {
  return path == FormulaPath::kCorrected ? "corrected" : "paper-verbatim";
}

QuadratureReport quadrature_variances(const SystemParams& params, FormulaPath path) {
  double inversion = 0.0;
  double coherence = 0.0;
  if (path == FormulaPath::kCorrected) {
    const SteadyState ss = steady_state(params);
    inversion = ss.inversion_w;
    coherence = ss.bloch.sp.real();
  } else {
    inversion = paper_inversion_eq10(params);
    coherence = paper_coherence_eq14(params);
  }
  QuadratureReport r;
  r.var_y_normal = 0.5 * (1.0 + inversion);
  r.var_x_normal = r.var_y_normal - 2.0 * coherence * coherence;
  r.squeezed = r.var_x_normal < 0.0;
  return r;
}

std::vector<OmegaInterval> squeezing_scan(double nbar, double omega_lo, double omega_hi,
                                          double resolution, FormulaPath path, double gamma) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  if (!(omega_hi > omega_lo)) throw std::invalid_argument("omega range must be ordered");
  validate({omega_lo, gamma, nbar});

  auto var_x = [&](double omega) {
    return quadrature_variances({omega, gamma, nbar}, path).var_x_normal;
  };
  // Bisect between an unsqueezed point `out` and a squeezed point `in`.
  auto edge = [&](double out, double in) {
    for (int i = 0; i < 200 && std::abs(in - out) > 1e-9; ++i) {
      const double mid = 0.5 * (out + in);
      (var_x(mid) < 0.0 ? in : out) = mid;
    }
    return 0.5 * (out + in);
  };

  const auto count = static_cast<std::size_t>(std::ceil((omega_hi - omega_lo) / resolution));
  const double step = (omega_hi - omega_lo) / static_cast<double>(count);
  std::vector<OmegaInterval> out;
  double prev = omega_lo;
  bool prev_sq = var_x(prev) < 0.0;
  double open = prev_sq ? omega_lo : 0.0;
  for (std::size_t k = 1; k <= count; ++k) {
    const double omega = omega_lo + step * static_cast<double>(k);
    const bool sq = var_x(omega) < 0.0;
    if (sq && !prev_sq) open = edge(prev, omega);
    if (!sq && prev_sq) out.push_back({open, edge(omega, prev)});
    prev = omega;
    prev_sq = sq;
  }
  if (prev_sq) out.push_back({open, omega_hi});
  return out;
}

UncertaintyRecord uncertainty_check(const BlochVector& state) {
  if (!is_physical(state)) throw UnphysicalState("state outside the Bloch ball");
  // sigma_x = (sigma_+ + sigma_-)/sqrt2, sigma_y = i(sigma_- - sigma_+)/sqrt2, both square to 1/2.
  const double mean_x = std::sqrt(2.0) * state.sm.real();
  const double mean_y = -std::sqrt(2.0) * state.sm.imag();
  const double normal = 0.5 * (1.0 + state.sz);

  UncertaintyRecord r;
  r.var_x_full = 0.5 - mean_x * mean_x;
  r.var_y_full = 0.5 - mean_y * mean_y;
  r.var_x_normal = normal - mean_x * mean_x;
  r.var_y_normal = normal - mean_y * mean_y;
  r.bound = 0.5 * std::abs(state.sz);
  r.product = r.var_x_full * r.var_y_full;

  constexpr double kSlack = 1e-12;
  if (r.var_x_full < -kSlack || r.var_y_full < -kSlack) {
    throw UncertaintyViolation("negative quadrature variance");
  }
  if (r.product < r.bound * r.bound - kSlack) {
    throw UncertaintyViolation("quadrature variances violate the uncertainty relation");
  }
  return r;
}

UncertaintyRecord uncertainty_check(const SystemParams& params) {
  return uncertainty_check(steady_state(params).bloch);
}

}  // namespace qdl
