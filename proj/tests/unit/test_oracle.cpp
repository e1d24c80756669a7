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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qdl/dynamics.hpp"
#include "qdl/oracle.hpp"

using namespace qdl;
using namespace qdl::oracle;

namespace {

std::vector<double> grid(double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = hi * static_cast<double>(k) / static_cast<double>(n - 1);
  return v;
}

}  // namespace

TEST_CASE("operator basis") {
  const Operator sp = sigma_plus(), sm = sigma_minus(), sz = sigma_z();
  CHECK((sp * sm - sm * sp - sz).norm() < 1e-15);
  CHECK((sm * sm).norm() == 0.0);
  // <sigma_-> = rho_ab
  const DensityMatrix rho{0.4, 0.6, complex{0.1, 0.2}};
  CHECK(std::abs((to_operator(rho) * sm).trace() - rho.rho_ab) < 1e-15);
}

TEST_CASE("master equation examples") {
  const Operator mixed = to_operator({0.5, 0.5, 0.0});
  CHECK(lindblad_rhs({0.0, 1.0, 0.0}, mixed)(0, 0).real() == doctest::Approx(-0.5));
  const Operator ground = to_operator({0.0, 1.0, 0.0});
  CHECK(lindblad_rhs({0.0, 1.0, 0.0}, ground).norm() == 0.0);
  CHECK(std::abs(lindblad_rhs({1.0, 1.0, 0.0}, ground)(0, 1)) == doctest::Approx(0.5));
}

TEST_CASE("master equation preserves trace and Hermiticity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const SystemParams p{5.0 * u(rng), 0.5 + u(rng), u(rng)};
    const double a = u(rng);
    const double lim = std::sqrt(a * (1.0 - a));
    const DensityMatrix rho{a, 1.0 - a, complex{lim * (u(rng) - 0.5), lim * (u(rng) - 0.5)}};
    const Operator d = lindblad_rhs(p, to_operator(rho));
    CHECK(std::abs(d.trace()) < 1e-14);
    CHECK((d - d.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("printed drive form breaks trace conservation") {
  const Operator rho = to_operator(density_from_bloch(steady_state({1.0, 1.0, 0.0}).bloch));
  CHECK(std::abs(lindblad_rhs({1.0, 1.0, 0.0}, rho, DriveForm::kAsPrinted).trace()) > 0.1);
}

TEST_CASE("RK4 evolution") {
  SUBCASE("free decay") {
    IntegratorConfig cfg;
    cfg.step = 1e-3;
    cfg.t_max = 3.0;
    const auto traj = evolve({0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, cfg);
    CHECK(traj.times.back() == 3.0);
    for (std::size_t k = 0; k < traj.times.size(); k += 100) {
      CHECK(std::abs(traj.states[k].rho_aa - std::exp(-traj.times[k])) < 1e-9);
    }
  }
  SUBCASE("long time reaches the fixed point") {
    const SystemParams p{2.0, 1.0, 0.3};
    const auto traj = evolve(p, {0.0, 1.0, 0.0}, IntegratorConfig::resolving(p, 40.0));
    CHECK(std::abs(traj.states.back().rho_aa - steady_state(p).rho_aa) < 1e-8);
  }
  SUBCASE("fourth-order convergence") {
    const SystemParams p{2.0, 1.0, 0.5};
    const DensityMatrix rho0{1.0, 0.0, 0.0};
    const double ref = evolve_refined(p, rho0, {1e-4, 2.0, 1e-14}, 0).state.rho_aa;
    double previous = 0.0;
    for (double h : {0.1, 0.05, 0.025}) {
      IntegratorConfig cfg{h, 2.0, 0.0};
      const double err = std::abs(evolve(p, rho0, cfg).states.back().rho_aa - ref);
      if (previous > 0.0) CHECK(previous / err == doctest::Approx(16.0).epsilon(0.1));
      previous = err;
    }
  }
  SUBCASE("refuses unstable steps") {
    CHECK_THROWS_AS(evolve({10.0, 1.0, 0.0}, {}, {0.5, 1.0, 1e-9}), std::invalid_argument);
    CHECK_THROWS_AS(evolve({1.0, 1.0, 0.0}, {}, {0.0, 1.0, 1e-9}), std::invalid_argument);
  }
}

TEST_CASE("Liouvillian null space") {
  CHECK(steady_numeric({0.0, 1.0, 0.5}).rho_aa == doctest::Approx(0.25));
  CHECK(steady_numeric({1.0, 1.0, 0.0}).rho_aa == doctest::Approx(1.0 / 3.0));
  const auto g = steady_numeric({0.0, 1.0, 0.0});
  CHECK(g.rho_bb == doctest::Approx(1.0));
  CHECK(std::abs(g.rho_ab) < 1e-15);
  for (double w : {0.3, 2.0, 10.0}) {
    for (double n : {0.0, 0.75}) {
      const SystemParams p{w, 1.0, n};
      const auto num = steady_numeric(p);
      const auto exact = steady_state(p);
      CHECK(std::abs(num.rho_aa - exact.rho_aa) < 1e-12);
      CHECK(std::abs(num.rho_ab - exact.bloch.sm) < 1e-12);
      Eigen::Vector4cd v;
      const Operator op = to_operator(num);
      v << op(0, 0), op(1, 0), op(0, 1), op(1, 1);
      CHECK((liouvillian(p) * v).norm() < 1e-12);
    }
  }
}

TEST_CASE("regression correlators at the endpoints") {
  const SystemParams p{1.0, 1.0, 0.25};
  const auto ss = steady_state(p);
  const auto taus = grid(60.0, 601);
  const auto dip = correlator_numeric(p, CorrelatorKind::kDipole, taus);
  CHECK(std::abs(dip.front() - ss.rho_aa) < 1e-12);
  CHECK(std::abs(dip.back() - std::norm(ss.bloch.sp)) < 1e-9);
  const auto inten = correlator_numeric(p, CorrelatorKind::kIntensity, taus);
  CHECK(std::abs(inten.front() + ss.rho_aa) < 1e-12);
  const std::vector<double> bad = {0.5, 1.0};
  CHECK_THROWS_AS(correlator_numeric(p, CorrelatorKind::kDipole, bad), std::invalid_argument);
}

TEST_CASE("Fourier quadrature examples") {
  const auto taus = grid(40.0, 40001);
  std::vector<complex> decay(taus.size()), beat(taus.size());
  for (std::size_t k = 0; k < taus.size(); ++k) {
    decay[k] = std::exp(-taus[k]);
    beat[k] = std::exp(-taus[k]) * std::cos(5.0 * taus[k]);
  }
  const std::vector<double> ws = {0.0, 1.0, 5.0};
  const auto s = fourier_numeric(decay, taus, ws, 1.0);
  CHECK(s[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-10));
  const auto b = fourier_numeric(beat, taus, ws, 1.0);
  // 2 Re sum 1/2 / (1 - i(omega -+ 5))
  const double expect = (1.0 / (1.0 + 0.0) + 1.0 / (1.0 + 100.0));
  CHECK(b[2] == doctest::Approx(expect).epsilon(1e-8));

  std::vector<complex> constant(taus.size(), complex{0.3});
  CHECK_THROWS_WITH_AS(fourier_numeric(constant, taus, ws, 1.0), "coherent part present",
                       CoherentPartPresent);
}
