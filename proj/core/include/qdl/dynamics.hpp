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

#include <array>

#include "qdl/exponential_sum.hpp"
#include "qdl/params.hpp"

namespace qdl {

using Vec3c = std::array<complex, 3>;
using Mat3c = std::array<Vec3c, 3>;

/// Optical Bloch equations d/dt v = M v + b for v = (<sigma_->, <sigma_+>, <sigma_z>).
struct BlochGenerator {
  Mat3c matrix{};
  Vec3c drive{};

  /// M v + scale * b
  Vec3c apply(const Vec3c& v, complex scale = 1.0) const;
};

BlochGenerator bloch_generator(const SystemParams& params);

/// Eigenvalues of M: {-gamma(2n+1)/2, -alpha, -beta}.
std::array<complex, 3> generator_eigenvalues(const SystemParams& params);

struct SteadyState {
  BlochVector bloch;
  double rho_aa = 0.0;
  double inversion_w = -1.0;
};

/// Exact fixed point of the Bloch equations.
SteadyState steady_state(const SystemParams& params);

/// Printed steady-state inversion -1/[(1+2n)(2 omega^2/gamma^2 + 1)]. Agrees with
/// steady_state only when nbar = 0 or omega = 0.
double paper_inversion_eq10(const SystemParams& params);

/// Printed steady-state coherence omega*gamma^2/(2 alpha beta); correct only for gamma = 1.
double paper_coherence_eq14(const SystemParams& params);

/// Printed closed form for <sigma_z(t)> (requires alpha != beta).
double paper_inversion_eq6(const SystemParams& params, const BlochVector& init, double t);

/// Exact solution u(tau) of du/dtau = M u + scale * b, one ExponentialSum per component.
struct AffineSolution {
  std::array<ExponentialSum, 3> components;

  Vec3c operator()(double tau) const;
};

/// u(tau) = e^{M tau}(u0 - u_ss) + u_ss with u_ss = -scale * M^{-1} b.
///
/// The antisymmetric dipole combination decays alone at gamma(2n+1)/2; the symmetric
/// combination and sigma_z form a 2x2 block with rates alpha and beta. At the
/// degeneracy point (|xi| < kDegeneracyThreshold*gamma) that block is propagated in
/// the confluent form (1 + (A + kappa) tau) e^{-kappa tau}.
AffineSolution solve_affine(const SystemParams& params, const Vec3c& initial, complex scale);

AffineSolution transient_solution(const SystemParams& params, const BlochVector& init);

/// Bloch vector at time t starting from init. Throws UnphysicalState if init is
/// outside the Bloch ball.
BlochVector transient(const SystemParams& params, const BlochVector& init, double t);

}  // namespace qdl
