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

#include <complex>
#include <stdexcept>
#include <string>

namespace qdl {

using complex = std::complex<double>;

/// Physical configuration of a resonantly driven two-level atom in a thermal bath.
///
/// Frequencies are expressed in units of the damping rate and times in units of
/// 1/gamma; the canonical choice is gamma = 1. Evaluators that transcribe printed
/// formulas with an inconsistent gamma dependence (the `paper_*` functions) assume
/// gamma = 1, all other routines carry gamma explicitly.
struct SystemParams {
  double omega = 0.0;  ///< drive (Rabi) amplitude
  double gamma = 1.0;  ///< atomic damping constant
  double nbar = 0.0;   ///< reservoir mean photon number

  /// 2*nbar + 1
  double thermal_factor() const { return 2.0 * nbar + 1.0; }
  /// Decay rate of the dipole, gamma*(2 nbar + 1)/2.
  double dipole_rate() const { return 0.5 * gamma * thermal_factor(); }
  /// Mean decay rate of the dressed pair, (gamma/4)(6 nbar + 3).
  double dressed_rate() const { return 0.75 * gamma * thermal_factor(); }
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Physical-state violation (trace, positivity, Bloch ball).
class UnphysicalState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws InvalidParams unless omega >= 0, gamma > 0, nbar >= 0, all finite.
void validate(const SystemParams& params);

/// Atomic state as expectation values (<sigma_->, <sigma_+>, <sigma_z>).
struct BlochVector {
  complex sm{};
  complex sp{};
  double sz = -1.0;

  static BlochVector ground() { return {0.0, 0.0, -1.0}; }
  static BlochVector excited() { return {0.0, 0.0, 1.0}; }
};

/// 2x2 density matrix in the basis (|a> upper, |b> lower); rho_ba = conj(rho_ab).
struct DensityMatrix {
  double rho_aa = 0.0;
  double rho_bb = 1.0;
  complex rho_ab{};
};

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kBlochTolerance = 1e-12;

/// True if sp == conj(sm) and 4|sm|^2 + sz^2 <= 1 (within tol).
bool is_physical(const BlochVector& v, double tol = kBlochTolerance);
bool is_physical(const DensityMatrix& rho, double tol = kTraceTolerance);

/// <sigma_z> = rho_aa - rho_bb, <sigma_-> = Tr(rho sigma_-) = rho_ab.
BlochVector bloch_from_density(const DensityMatrix& rho);
DensityMatrix density_from_bloch(const BlochVector& v);

/// Relaxation structure (xi, alpha, beta) of the driven-dissipative atom.
///
/// xi = sqrt((gamma^2/16)(2n+1)^2 - omega^2) on the principal branch, so that for
/// omega above the degeneracy point xi = i|xi|. alpha and beta are the two decay
/// rates of the coupled dipole/inversion block.
struct EigenTriple {
  complex xi{};
  complex alpha{};
  complex beta{};
  bool degenerate = false;
};

/// |xi| threshold (relative to gamma) under which alpha and beta are treated as equal.
inline constexpr double kDegeneracyThreshold = 1e-9;

EigenTriple eigentriple(const SystemParams& params);

}  // namespace qdl
