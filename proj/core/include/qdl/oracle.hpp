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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qdl/params.hpp"

// Independent ground truth: direct integration of the Lindblad master equation on
// the full 2x2 density matrix. Nothing in here depends on the Bloch-equation code.
namespace qdl::oracle {

/// Operators on the atom, basis order (|a> upper, |b> lower).
using Operator = Eigen::Matrix2cd;

Operator sigma_plus();
Operator sigma_minus();
Operator sigma_z();

Operator to_operator(const DensityMatrix& rho);
/// Hermitian part is read back; throws UnphysicalState if trace/positivity fail by > tol.
DensityMatrix to_density(const Operator& rho, double tol = 1e-9);

/// Coherent drive term as derived from the Hamiltonian (commutator), or as typeset in
/// the source master equation with -rho sigma_- in place of +rho sigma_-.
enum class DriveForm { kCommutator, kAsPrinted };

/// Right-hand side of the master equation. Linear in rho, so it is also applied to
/// non-Hermitian operators during two-time regression.
Operator lindblad_rhs(const SystemParams& params, const Operator& rho,
                      DriveForm form = DriveForm::kCommutator);

struct IntegratorConfig {
  double step = 1e-3;
  double t_max = 10.0;
  double tolerance = 1e-10;

  /// step = 0.01 / max(gamma(2n+1), omega)
  static IntegratorConfig resolving(const SystemParams& params, double t_max);
};

/// Throws std::invalid_argument if step <= 0 or step * (gamma(2n+1) + omega) > 1.
void check_stability(const SystemParams& params, const IntegratorConfig& cfg);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
};

/// Fixed-step RK4 from 0 to cfg.t_max; the step is shortened so that t_max is hit
/// exactly. Every step is recorded.
Trajectory evolve(const SystemParams& params, const DensityMatrix& rho0,
                  const IntegratorConfig& cfg, DriveForm form = DriveForm::kCommutator);

/// RK4 propagation of an arbitrary operator, sampled at ascending times (first >= 0).
/// Each interval is split into equal sub-steps no longer than cfg.step.
std::vector<Operator> propagate(const SystemParams& params, const Operator& x0,
                                std::span<const double> times, const IntegratorConfig& cfg,
                                DriveForm form = DriveForm::kCommutator);

struct RefinedState {
  DensityMatrix state;
  double step = 0.0;
  double error_estimate = 0.0;
};

/// State at cfg.t_max, halving the step until successive results differ by less
/// than cfg.tolerance (max-norm). Gives up after `max_halvings`.
RefinedState evolve_refined(const SystemParams& params, const DensityMatrix& rho0,
                            const IntegratorConfig& cfg, int max_halvings = 8);

/// Null space of the 4x4 Liouvillian with unit trace.
DensityMatrix steady_numeric(const SystemParams& params);

/// 4x4 superoperator matrix acting on column-stacked operators.
Eigen::Matrix4cd liouvillian(const SystemParams& params, DriveForm form = DriveForm::kCommutator);

enum class CorrelatorKind {
  kDipole,     ///< <sigma_+(0) sigma_-(tau)>_ss
  kIntensity,  ///< <sigma_+(0) sigma_z(tau) sigma_-(0)>_ss
};

/// Two-time correlator on an ascending tau grid starting at 0, via the regression
/// theorem: <A(0) B(tau)> = Tr[B e^{L tau}(rho_ss A)].
std::vector<complex> correlator_numeric(const SystemParams& params, CorrelatorKind kind,
                                        std::span<const double> tau_grid);
std::vector<complex> correlator_numeric(const SystemParams& params, CorrelatorKind kind,
                                        std::span<const double> tau_grid,
                                        const IntegratorConfig& cfg);

class CoherentPartPresent : public std::domain_error {
 public:
  CoherentPartPresent() : std::domain_error("coherent part present") {}
};

/// 2 Re int_0^inf C(tau) e^{i omega tau} dtau: composite Simpson over the uniform
/// tau grid plus the exponential tail C(T) e^{i omega T}/(tail_rate - i omega).
/// Throws CoherentPartPresent if C has not decayed at the end of the window.
std::vector<double> fourier_numeric(std::span<const complex> series,
                                    std::span<const double> tau_grid,
                                    std::span<const double> omega_grid, double tail_rate);

}  // namespace qdl::oracle
