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

#include "qdl/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace qdl {

Vec3c BlochGenerator::apply(const Vec3c& v, complex scale) const {
  Vec3c out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = scale * drive[i];
    for (std::size_t j = 0; j < 3; ++j) out[i] += matrix[i][j] * v[j];
  }
  return out;
}

BlochGenerator bloch_generator(const SystemParams& params) {
  validate(params);
  const double rate = params.dipole_rate();
  const double half_drive = 0.5 * params.omega;
  BlochGenerator gen;
  gen.matrix[0] = {-rate, 0.0, -half_drive};
  gen.matrix[1] = {0.0, -rate, -half_drive};
  gen.matrix[2] = {params.omega, params.omega, -2.0 * rate};
  gen.drive = {0.0, 0.0, -params.gamma};
  return gen;
}

std::array<complex, 3> generator_eigenvalues(const SystemParams& params) {
  const EigenTriple e = eigentriple(params);
  return {complex{-params.dipole_rate(), 0.0}, -e.alpha, -e.beta};
}

namespace {

// Fixed point of the Bloch equations per unit drive: sm = sp = omega*gamma/D,
// sz = -gamma^2 (2n+1)/D with D = gamma^2 (2n+1)^2 + 2 omega^2.
Vec3c unit_fixed_point(const SystemParams& params) {
  const double g = params.gamma;
  const double c = params.thermal_factor();
  const double denom = g * g * c * c + 2.0 * params.omega * params.omega;
  const double coherence = params.omega * g / denom;
  return {coherence, coherence, -g * g * c / denom};
}

}  // namespace

SteadyState steady_state(const SystemParams& params) {
  validate(params);
  const Vec3c v = unit_fixed_point(params);
  SteadyState ss;
  ss.bloch = {v[0], v[1], v[2].real()};
  ss.inversion_w = v[2].real();
  ss.rho_aa = 0.5 * (1.0 + ss.inversion_w);
  return ss;
}

double paper_inversion_eq10(const SystemParams& params) {
  validate(params);
  const double ratio = params.omega / params.gamma;
  return -1.0 / (params.thermal_factor() * (2.0 * ratio * ratio + 1.0));
}

double paper_coherence_eq14(const SystemParams& params) {
  const EigenTriple e = eigentriple(params);
  const double g = params.gamma;
  return (params.omega * g * g / (2.0 * e.alpha * e.beta)).real();
}

double paper_inversion_eq6(const SystemParams& params, const BlochVector& init, double t) {
  const EigenTriple e = eigentriple(params);
  if (e.degenerate) throw std::domain_error("printed transient is singular at alpha == beta");
  const double g = params.gamma;
  const double c = params.thermal_factor();
  const complex a = e.alpha;
  const complex b = e.beta;
  const complex gap = b - a;
  const complex offset = g * g * c / (2.0 * a * b);
  const complex bracket = (b - g * c) / gap * init.sz + g * g * c / (2.0 * a * gap) +
                          params.omega / gap * (init.sm + init.sp) - g / gap;
  const complex value = (init.sz + offset) * std::exp(-b * t) - offset +
                        bracket * (std::exp(-a * t) - std::exp(-b * t));
  return value.real();
}

Vec3c AffineSolution::operator()(double tau) const {
  return {components[0](tau), components[1](tau), components[2](tau)};
}

AffineSolution solve_affine(const SystemParams& params, const Vec3c& initial, complex scale) {
  const EigenTriple e = eigentriple(params);
  const double rate = params.dipole_rate();
  const double omega = params.omega;

  const Vec3c fixed = unit_fixed_point(params);
  AffineSolution sol;
  Vec3c dev{};
  for (std::size_t i = 0; i < 3; ++i) {
    sol.components[i].set_constant(scale * fixed[i]);
    dev[i] = initial[i] - scale * fixed[i];
  }

  // Antisymmetric dipole combination decouples.
  const complex anti = dev[0] - dev[1];
  sol.components[0].add_mode(rate, 0.5 * anti);
  sol.components[1].add_mode(rate, -0.5 * anti);

  // Symmetric combination s and inversion z: d/dt (s, z) = A (s, z),
  // A = [[-rate, -omega], [omega, -2 rate]].
  const complex sym = dev[0] + dev[1];
  const complex z = dev[2];
  auto add_sym = [&](complex r, complex w_sym, complex w_z, int power) {
    sol.components[0].add_mode(r, 0.5 * w_sym, power);
    sol.components[1].add_mode(r, 0.5 * w_sym, power);
    sol.components[2].add_mode(r, w_z, power);
  };

  if (e.degenerate) {
    // e^{A tau} = e^{-kappa tau} (1 + (A + kappa) tau), kappa = 3 rate / 2.
    const double kappa = params.dressed_rate();
    add_sym(kappa, sym, z, 0);
    add_sym(kappa, (kappa - rate) * sym - omega * z, omega * sym + (kappa - 2.0 * rate) * z, 1);
  } else {
    // e^{A tau} = [(A + beta) e^{-alpha tau} - (A + alpha) e^{-beta tau}] / (beta - alpha)
    const complex a = e.alpha;
    const complex b = e.beta;
    const complex gap = b - a;
    add_sym(a, ((b - rate) * sym - omega * z) / gap, (omega * sym + (b - 2.0 * rate) * z) / gap, 0);
    add_sym(b, -((a - rate) * sym - omega * z) / gap, -(omega * sym + (a - 2.0 * rate) * z) / gap,
            0);
  }
  return sol;
}

AffineSolution transient_solution(const SystemParams& params, const BlochVector& init) {
  if (!is_physical(init)) throw UnphysicalState("initial Bloch vector outside the Bloch ball");
  return solve_affine(params, {init.sm, init.sp, init.sz}, 1.0);
}

BlochVector transient(const SystemParams& params, const BlochVector& init, double t) {
  validate(params);
  if (t < 0.0) throw std::domain_error("transient requires t >= 0");
  if (t == 0.0) {
    if (!is_physical(init)) throw UnphysicalState("initial Bloch vector outside the Bloch ball");
    return init;
  }
  const Vec3c v = transient_solution(params, init)(t);
  return {v[0], v[1], v[2].real()};
}

}  // namespace qdl
