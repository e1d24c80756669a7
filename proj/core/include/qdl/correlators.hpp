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

#include "qdl/dynamics.hpp"
#include "qdl/exponential_sum.hpp"
#include "qdl/params.hpp"

namespace qdl {

/// Initial data for a two-time correlator <X(0) v(tau)> where v is the Bloch
/// operator triple. `sandwich_scale` = <X> multiplies the constant drive.
struct RegressionProblem {
  Vec3c initial{};
  complex sandwich_scale{};
};

AffineSolution regression_solve(const SystemParams& params, const RegressionProblem& problem);

/// X = sigma_+: initial (P, 0, -<sigma_+>), scale <sigma_+>.
RegressionProblem dipole_problem(const SystemParams& params);
/// X(.) = sigma_+ (.) sigma_-: initial (0, 0, -P), scale P.
RegressionProblem intensity_problem(const SystemParams& params);

/// <sigma_+(t) sigma_-(t + tau)>_ss as an exponential sum; constant = <sigma_+>_ss^2.
ExponentialSum dipole_correlator(const SystemParams& params);

/// <sigma_+(t) sigma_z(t + tau) sigma_-(t)>_ss.
ExponentialSum intensity_numerator(const SystemParams& params);

class NoEmission : public std::domain_error {
 public:
  NoEmission() : std::domain_error("no emission: g2 undefined") {}
};

/// Closed-form g2(tau) = [P + u_z(tau)] / (2 P^2).
class G2Function {
 public:
  /// Throws NoEmission when the steady-state excited population is zero.
  explicit G2Function(const SystemParams& params);

  double operator()(double tau) const;
  double population() const { return population_; }
  const ExponentialSum& numerator() const { return numerator_; }

 private:
  double population_ = 0.0;
  ExponentialSum numerator_;
};

struct G2Curve {
  std::vector<double> tau;
  std::vector<double> values;
};

G2Curve g2(const SystemParams& params, std::span<const double> tau_grid);

/// Strong-drive approximation 1 - cos(omega tau) e^{-(gamma/4)(6n+3) tau}.
double g2_strong(const SystemParams& params, double tau);

/// Printed closed form of g2 in terms of alpha, beta (gamma = 1 units).
double paper_g2_eq24(const SystemParams& params, double tau);

/// Printed closed form of the dipole correlator, with the leading factor 2 as typeset.
/// Undefined at omega = 0 (a 0/0 in the alpha-mode coefficient); use paper_dipole_eq18.
complex paper_dipole_eq13(const SystemParams& params, double tau);
/// Printed weak-drive limit 2 P e^{-gamma(2n+1) tau/2}.
double paper_dipole_eq18(const SystemParams& params, double tau);

enum class PhotonStatistics { kSubPoissonian, kPoissonian, kSuperPoissonian };

struct StatisticsRegion {
  double tau_begin = 0.0;
  double tau_end = 0.0;
  PhotonStatistics kind = PhotonStatistics::kPoissonian;
};

struct StatisticsReport {
  bool antibunched = false;
  std::vector<StatisticsRegion> regions;

  /// Fraction of grid points classified super-Poissonian.
  double super_fraction = 0.0;
};

inline constexpr double kPoissonTolerance = 1e-9;

StatisticsReport classify_statistics(const G2Curve& curve);

/// Integral of max(g2 - 1, 0) over tau >= tau_from (trapezoid on the curve grid).
double super_poissonian_excess(const G2Curve& curve, double tau_from);

const char* to_string(PhotonStatistics kind);

}  // namespace qdl
