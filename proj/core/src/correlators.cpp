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

#include "qdl/correlators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdl {

AffineSolution regression_solve(const SystemParams& params, const RegressionProblem& problem) {
  return solve_affine(params, problem.initial, problem.sandwich_scale);
}

RegressionProblem dipole_problem(const SystemParams& params) {
  const SteadyState ss = steady_state(params);
  return {{ss.rho_aa, 0.0, -ss.bloch.sp}, ss.bloch.sp};
}

RegressionProblem intensity_problem(const SystemParams& params) {
  const SteadyState ss = steady_state(params);
  return {{0.0, 0.0, -ss.rho_aa}, ss.rho_aa};
}

ExponentialSum dipole_correlator(const SystemParams& params) {
  return regression_solve(params, dipole_problem(params)).components[0];
}

ExponentialSum intensity_numerator(const SystemParams& params) {
  return regression_solve(params, intensity_problem(params)).components[2];
}

G2Function::G2Function(const SystemParams& params)
    : population_(steady_state(params).rho_aa) {
  if (!(population_ > 0.0)) throw NoEmission();
  numerator_ = intensity_numerator(params);
}

double G2Function::operator()(double tau) const {
  return (population_ + numerator_(tau).real()) / (2.0 * population_ * population_);
}

G2Curve g2(const SystemParams& params, std::span<const double> tau_grid) {
  const G2Function fn(params);
  G2Curve curve;
  curve.tau.assign(tau_grid.begin(), tau_grid.end());
  curve.values.reserve(tau_grid.size());
  for (double tau : tau_grid) curve.values.push_back(fn(tau));
  return curve;
}

double g2_strong(const SystemParams& params, double tau) {
  validate(params);
  return 1.0 - std::cos(params.omega * tau) * std::exp(-params.dressed_rate() * tau);
}

double paper_g2_eq24(const SystemParams& params, double tau) {
  const EigenTriple e = eigentriple(params);
  if (e.degenerate) throw std::domain_error("printed g2 is singular at alpha == beta");
  const double g = params.gamma;
  const double c = params.thermal_factor();
  const double n = params.nbar;
  const complex a = e.alpha;
  const complex b = e.beta;
  const double population = steady_state(params).rho_aa;
  const complex bracket = (2.0 * a * b - g * g * c) / (2.0 * a * b) +
                          (2.0 * b * a - g * g * c - 4.0 * b * g * n) / (2.0 * b * (b - a)) *
                              std::exp(-b * tau) +
                          (g * g * c - 2.0 * b * a + 4.0 * a * g * n) / (2.0 * a * (b - a)) *
                              std::exp(-a * tau);
  return (bracket / (2.0 * population)).real();
}

complex paper_dipole_eq13(const SystemParams& params, double tau) {
  const EigenTriple e = eigentriple(params);
  if (e.degenerate) throw std::domain_error("printed dipole correlator is singular at alpha == beta");
  if (params.omega == 0.0) throw std::domain_error("printed dipole correlator is 0/0 at omega == 0");
  const double g = params.gamma;
  const double c = params.thermal_factor();
  const double om = params.omega;
  const double rate = 0.5 * g * c;
  const complex a = e.alpha;
  const complex b = e.beta;
  const complex gap = b - a;
  const double population = steady_state(params).rho_aa;
  const double coherence = paper_coherence_eq14(params);

  const complex first = 2.0 * std::exp(-rate * tau) -
                        om * om / (2.0 * (rate - b) * gap) * (std::exp(-b * tau) - std::exp(-a * tau));
  const complex beta_term = -om / (2.0 * (rate - b)) *
                            (g / gap - g * g * c / (2.0 * b * gap) + (a - g * c) / gap) *
                            std::exp(-b * tau);
  const complex alpha_term = -om / (2.0 * (rate - a)) *
                             (g * g * c / (2.0 * a * gap) - g / gap + (g * c - b) / gap) *
                             std::exp(-a * tau);
  const complex tail = om * g * g / (2.0 * b * a) * (1.0 - std::exp(-rate * tau));
  return population * first + coherence * (beta_term + alpha_term + tail);
}

double paper_dipole_eq18(const SystemParams& params, double tau) {
  const double population = steady_state(params).rho_aa;
  return 2.0 * population * std::exp(-params.dipole_rate() * tau);
}

namespace {

PhotonStatistics classify(double value) {
  if (value < 1.0 - kPoissonTolerance) return PhotonStatistics::kSubPoissonian;
  if (value > 1.0 + kPoissonTolerance) return PhotonStatistics::kSuperPoissonian;
  return PhotonStatistics::kPoissonian;
}

}  // namespace

StatisticsReport classify_statistics(const G2Curve& curve) {
  if (curve.tau.size() != curve.values.size()) {
    throw std::invalid_argument("g2 curve grid and values differ in length");
  }
  StatisticsReport report;
  const auto& v = curve.values;
  if (v.empty()) return report;

  // Antibunched: strictly rising off tau = 0 and never dipping below g2(0) before
  // the first local maximum.
  if (v.size() >= 2 && v[1] > v[0]) {
    report.antibunched = true;
    for (std::size_t k = 1; k < v.size(); ++k) {
      if (v[k] < v[0]) {
        report.antibunched = false;
        break;
      }
      if (k + 1 < v.size() && v[k + 1] < v[k]) break;
    }
  }

  std::size_t super = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const PhotonStatistics kind = classify(v[k]);
    if (kind == PhotonStatistics::kSuperPoissonian) ++super;
    if (!report.regions.empty() && report.regions.back().kind == kind) {
      report.regions.back().tau_end = curve.tau[k];
    } else {
      report.regions.push_back({curve.tau[k], curve.tau[k], kind});
    }
  }
  report.super_fraction = static_cast<double>(super) / static_cast<double>(v.size());
  return report;
}

double super_poissonian_excess(const G2Curve& curve, double tau_from) {
  double total = 0.0;
  for (std::size_t k = 1; k < curve.tau.size(); ++k) {
    if (curve.tau[k - 1] < tau_from) continue;
    const double left = std::max(curve.values[k - 1] - 1.0, 0.0);
    const double right = std::max(curve.values[k] - 1.0, 0.0);
    total += 0.5 * (left + right) * (curve.tau[k] - curve.tau[k - 1]);
  }
  return total;
}

const char* to_string(PhotonStatistics kind) {
  switch (kind) {
    case PhotonStatistics::kSubPoissonian:
      return "sub";
    case PhotonStatistics::kPoissonian:
      return "poissonian";
    case PhotonStatistics::kSuperPoissonian:
      return "super";
  }
  return "unknown";
}

}  // namespace qdl
