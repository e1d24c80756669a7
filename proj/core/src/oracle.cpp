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

#include "qdl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdl::oracle {

Operator sigma_plus() {
  Operator op = Operator::Zero();
  op(0, 1) = 1.0;
  return op;
}

Operator sigma_minus() {
  Operator op = Operator::Zero();
  op(1, 0) = 1.0;
  return op;
}

Operator sigma_z() {
  Operator op = Operator::Zero();
  op(0, 0) = 1.0;
  op(1, 1) = -1.0;
  return op;
}

Operator to_operator(const DensityMatrix& rho) {
  Operator op;
  op << rho.rho_aa, rho.rho_ab, std::conj(rho.rho_ab), rho.rho_bb;
  return op;
}

DensityMatrix to_density(const Operator& rho, double tol) {
  const Operator herm = 0.5 * (rho + rho.adjoint());
  DensityMatrix out{herm(0, 0).real(), herm(1, 1).real(), herm(0, 1)};
  if (!is_physical(out, tol)) throw UnphysicalState("operator is not a density matrix");
  return out;
}

Operator lindblad_rhs(const SystemParams& params, const Operator& rho, DriveForm form) {
  const Operator sp = sigma_plus();
  const Operator sm = sigma_minus();
  const Operator spsm = sp * sm;
  const Operator smsp = sm * sp;

  const double last_sign = form == DriveForm::kCommutator ? 1.0 : -1.0;
  Operator out = 0.5 * params.omega * (sp * rho - rho * sp - sm * rho + last_sign * (rho * sm));

  const double down = 0.5 * params.gamma * (params.nbar + 1.0);
  const double up = 0.5 * params.gamma * params.nbar;
  out += down * (2.0 * sm * rho * sp - spsm * rho - rho * spsm);
  out += up * (2.0 * sp * rho * sm - smsp * rho - rho * smsp);
  return out;
}

IntegratorConfig IntegratorConfig::resolving(const SystemParams& params, double t_max) {
  validate(params);
  IntegratorConfig cfg;
  cfg.step = 0.01 / std::max(params.gamma * params.thermal_factor(), params.omega);
  cfg.t_max = t_max;
  return cfg;
}

void check_stability(const SystemParams& params, const IntegratorConfig& cfg) {
  if (!(cfg.step > 0.0)) throw std::invalid_argument("integrator step must be positive");
  if (cfg.step * (params.gamma * params.thermal_factor() + params.omega) > 1.0) {
    throw std::invalid_argument("integrator step too large for stability");
  }
}

namespace {

Operator rk4_step(const SystemParams& params, const Operator& x, double h, DriveForm form) {
  const Operator k1 = lindblad_rhs(params, x, form);
  const Operator k2 = lindblad_rhs(params, x + 0.5 * h * k1, form);
  const Operator k3 = lindblad_rhs(params, x + 0.5 * h * k2, form);
  const Operator k4 = lindblad_rhs(params, x + h * k3, form);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

DensityMatrix read_state(const Operator& rho, DriveForm form) {
  // The as-printed drive does not preserve trace, so no physicality check there.
  if (form == DriveForm::kAsPrinted) return {rho(0, 0).real(), rho(1, 1).real(), rho(0, 1)};
  return to_density(rho);
}

}  // namespace

Trajectory evolve(const SystemParams& params, const DensityMatrix& rho0,
                  const IntegratorConfig& cfg, DriveForm form) {
  validate(params);
  check_stability(params, cfg);
  if (!is_physical(rho0)) throw UnphysicalState("initial density matrix is not physical");
  if (cfg.t_max < 0.0) throw std::invalid_argument("t_max must be >= 0");

  const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_max / cfg.step - 1e-12));
  const double h = steps == 0 ? 0.0 : cfg.t_max / static_cast<double>(steps);

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  Operator rho = to_operator(rho0);
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);
  for (std::size_t k = 1; k <= steps; ++k) {
    rho = rk4_step(params, rho, h, form);
    traj.times.push_back(h * static_cast<double>(k));
    traj.states.push_back(read_state(rho, form));
  }
  return traj;
}

std::vector<Operator> propagate(const SystemParams& params, const Operator& x0,
                                std::span<const double> times, const IntegratorConfig& cfg,
                                DriveForm form) {
  validate(params);
  check_stability(params, cfg);
  std::vector<Operator> out;
  out.reserve(times.size());
  Operator x = x0;
  double t = 0.0;
  for (double target : times) {
    if (target < t) throw std::invalid_argument("sample times must be ascending from 0");
    const double span = target - t;
    const auto sub = static_cast<std::size_t>(std::ceil(span / cfg.step - 1e-12));
    if (sub > 0) {
      const double h = span / static_cast<double>(sub);
      for (std::size_t k = 0; k < sub; ++k) x = rk4_step(params, x, h, form);
    }
    t = target;
    out.push_back(x);
  }
  return out;
}

RefinedState evolve_refined(const SystemParams& params, const DensityMatrix& rho0,
                            const IntegratorConfig& cfg, int max_halvings) {
  IntegratorConfig run = cfg;
  const double target = cfg.t_max;
  const Operator start = to_operator(rho0);
  const std::span<const double> when(&target, 1);
  Operator coarse = propagate(params, start, when, run).front();
  for (int i = 0; i < max_halvings; ++i) {
    run.step *= 0.5;
    const Operator fine = propagate(params, start, when, run).front();
    const double err = (fine - coarse).cwiseAbs().maxCoeff();
    if (err < cfg.tolerance || i + 1 == max_halvings) {
      return {to_density(fine), run.step, err};
    }
    coarse = fine;
  }
  return {to_density(coarse), run.step, 0.0};
}

Eigen::Matrix4cd liouvillian(const SystemParams& params, DriveForm form) {
  validate(params);
  Eigen::Matrix4cd super = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      Operator basis = Operator::Zero();
      basis(i, j) = 1.0;
      const Operator image = lindblad_rhs(params, basis, form);
      const int col = i + 2 * j;
      for (int q = 0; q < 2; ++q) {
        for (int p = 0; p < 2; ++p) super(p + 2 * q, col) = image(p, q);
      }
    }
  }
  return super;
}

DensityMatrix steady_numeric(const SystemParams& params) {
  Eigen::Matrix4cd system = liouvillian(params);
  Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();
  // The population rows are linearly dependent; replace the first with Tr(rho) = 1.
  system.row(0) << 1.0, 0.0, 0.0, 1.0;
  rhs(0) = 1.0;
  const Eigen::Vector4cd vec = system.fullPivLu().solve(rhs);
  Operator rho;
  rho << vec(0), vec(2), vec(1), vec(3);
  return to_density(rho);
}

std::vector<complex> correlator_numeric(const SystemParams& params, CorrelatorKind kind,
                                        std::span<const double> tau_grid) {
  const double t_max = tau_grid.empty() ? 0.0 : tau_grid.back();
  return correlator_numeric(params, kind, tau_grid, IntegratorConfig::resolving(params, t_max));
}

std::vector<complex> correlator_numeric(const SystemParams& params, CorrelatorKind kind,
                                        std::span<const double> tau_grid,
                                        const IntegratorConfig& cfg) {
  if (!tau_grid.empty() && tau_grid.front() != 0.0) {
    throw std::invalid_argument("tau grid must start at 0");
  }
  const Operator rho = to_operator(steady_numeric(params));
  Operator start;
  Operator observable;
  if (kind == CorrelatorKind::kDipole) {
    start = rho * sigma_plus();
    observable = sigma_minus();
  } else {
    start = sigma_minus() * rho * sigma_plus();
    observable = sigma_z();
  }
  const std::vector<Operator> path = propagate(params, start, tau_grid, cfg);
  std::vector<complex> out;
  out.reserve(path.size());
  for (const auto& x : path) out.push_back((observable * x).trace());
  return out;
}

std::vector<double> fourier_numeric(std::span<const complex> series,
                                    std::span<const double> tau_grid,
                                    std::span<const double> omega_grid, double tail_rate) {
  const std::size_t n = tau_grid.size();
  if (series.size() != n) throw std::invalid_argument("series and tau grid differ in length");
  if (n < 3) throw std::invalid_argument("need at least 3 samples");
  if (!(tail_rate > 0.0)) throw std::invalid_argument("tail rate must be positive");
  const double h = (tau_grid.back() - tau_grid.front()) / static_cast<double>(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    if (std::abs(tau_grid[k] - tau_grid[k - 1] - h) > 1e-9 * h) {
      throw std::invalid_argument("tau grid must be uniform");
    }
  }

  double peak = 0.0;
  for (const auto& c : series) peak = std::max(peak, std::abs(c));
  const double span = tau_grid.back() - tau_grid.front();
  const double allowed = std::max(100.0 * peak * std::exp(-tail_rate * span), 1e-12 * peak);
  if (std::abs(series.back()) > allowed) throw CoherentPartPresent();

  // Composite Simpson weights; an odd interval count closes with Simpson 3/8.
  std::vector<double> weights(n, 0.0);
  const std::size_t intervals = n - 1;
  const std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
  for (std::size_t k = 0; k + 2 <= simpson_end; k += 2) {
    weights[k] += h / 3.0;
    weights[k + 1] += 4.0 * h / 3.0;
    weights[k + 2] += h / 3.0;
  }
  if (simpson_end != intervals) {
    const std::size_t k = simpson_end;
    weights[k] += 3.0 * h / 8.0;
    weights[k + 1] += 9.0 * h / 8.0;
    weights[k + 2] += 9.0 * h / 8.0;
    weights[k + 3] += 3.0 * h / 8.0;
  }

  constexpr std::size_t kReseed = 512;
  std::vector<double> out;
  out.reserve(omega_grid.size());
  for (double omega : omega_grid) {
    const complex rotate = std::polar(1.0, omega * h);
    complex phase{};
    complex acc{};
    for (std::size_t k = 0; k < n; ++k) {
      phase = k % kReseed == 0 ? std::polar(1.0, omega * tau_grid[k]) : phase * rotate;
      acc += weights[k] * series[k] * phase;
    }
    const double end = tau_grid.back();
    acc += series.back() * std::polar(1.0, omega * end) / complex{tail_rate, -omega};
    out.push_back(2.0 * acc.real());
  }
  return out;
}

}  // namespace qdl::oracle
