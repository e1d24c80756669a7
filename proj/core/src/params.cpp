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

#include "qdl/params.hpp"

#include <cmath>

namespace qdl {

void validate(const SystemParams& params) {
  if (!std::isfinite(params.omega) || !std::isfinite(params.gamma) ||
      !std::isfinite(params.nbar)) {
    throw InvalidParams("non-finite parameter");
  }
  if (params.omega < 0.0) throw InvalidParams("negative drive");
  if (params.gamma <= 0.0) throw InvalidParams("non-positive damping");
  if (params.nbar < 0.0) throw InvalidParams("negative thermal occupation");
}

bool is_physical(const BlochVector& v, double tol) {
  if (!std::isfinite(v.sz) || std::abs(v.sp - std::conj(v.sm)) > tol) return false;
  if (v.sz < -1.0 - tol || v.sz > 1.0 + tol) return false;
  return 4.0 * std::norm(v.sm) + v.sz * v.sz <= 1.0 + tol;
}

bool is_physical(const DensityMatrix& rho, double tol) {
  if (std::abs(rho.rho_aa + rho.rho_bb - 1.0) > tol) return false;
  if (rho.rho_aa < -tol || rho.rho_bb < -tol) return false;
  return std::norm(rho.rho_ab) <= rho.rho_aa * rho.rho_bb + tol;
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (!is_physical(rho)) throw UnphysicalState("density matrix outside the Bloch ball");
  return {rho.rho_ab, std::conj(rho.rho_ab), rho.rho_aa - rho.rho_bb};
}

DensityMatrix density_from_bloch(const BlochVector& v) {
  if (!is_physical(v)) throw UnphysicalState("Bloch vector outside the Bloch ball");
  return {0.5 * (1.0 + v.sz), 0.5 * (1.0 - v.sz), v.sm};
}

EigenTriple eigentriple(const SystemParams& params) {
  validate(params);
  const double g = params.gamma;
  const double c = params.thermal_factor();
  const double radicand = g * g * c * c / 16.0 - params.omega * params.omega;
  EigenTriple e;
  e.xi = radicand >= 0.0 ? complex{std::sqrt(radicand), 0.0}
                         : complex{0.0, std::sqrt(-radicand)};
  const double mean = params.dressed_rate();
  e.alpha = mean - e.xi;
  e.beta = mean + e.xi;
  e.degenerate = std::abs(e.xi) < kDegeneracyThreshold * g;
  return e;
}

}  // namespace qdl
