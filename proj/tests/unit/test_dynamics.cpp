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

#include <algorithm>
#include <cmath>
#include <random>

#include "qdl/dynamics.hpp"
#include "qdl/oracle.hpp"

using namespace qdl;

namespace {

std::array<complex, 3> sorted(std::array<complex, 3> v) {
  std::sort(v.begin(), v.end(), [](complex a, complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

double residual(const SystemParams& p, const BlochVector& v) {
  const auto g = bloch_generator(p);
  const auto r = g.apply({v.sm, v.sp, complex{v.sz}});
  return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
}

}  // namespace

TEST_CASE("generator eigenvalues") {
  auto e = sorted(generator_eigenvalues({0.0, 1.0, 0.0}));
  CHECK(e[0].real() == doctest::Approx(-1.0));
  CHECK(e[1].real() == doctest::Approx(-0.5));
  CHECK(e[2].real() == doctest::Approx(-0.5));

  e = generator_eigenvalues({1.0, 1.0, 0.5});
  CHECK(e[0].real() == doctest::Approx(-1.0));
  CHECK(std::abs(e[1] + e[2] + 3.0) < 1e-12);
  CHECK(std::abs(e[1] * e[2] - 3.0) < 1e-12);

  e = sorted(generator_eigenvalues({10.0, 1.0, 0.0}));
  CHECK(e[0].real() == doctest::Approx(-0.75));
  CHECK(e[0].imag() == doctest::Approx(-9.99687).epsilon(1e-6));
  CHECK(e[2].real() == doctest::Approx(-0.5));
}

TEST_CASE("steady state examples") {
  auto s = steady_state({0.0, 1.0, 0.0});
  CHECK(s.inversion_w == -1.0);
  CHECK(s.rho_aa == 0.0);
  CHECK(s.bloch.sp == complex{});

  s = steady_state({1.0, 1.0, 0.0});
  CHECK(s.inversion_w == doctest::Approx(-1.0 / 3.0));
  CHECK(s.rho_aa == doctest::Approx(1.0 / 3.0));
  CHECK(s.bloch.sp.real() == doctest::Approx(1.0 / 3.0));

  CHECK(steady_state({0.0, 1.0, 0.5}).rho_aa == doctest::Approx(0.25));
  CHECK(steady_state({0.0, 1.0, 1e6}).rho_aa == doctest::Approx(0.5).epsilon(1e-6));
  for (double n : {0.0, 0.25, 0.5, 0.75}) {
    CHECK(std::abs(steady_state({50.0, 1.0, n}).rho_aa - 0.5) < 5e-4);
  }
}

TEST_CASE("steady state is the fixed point and matches the excited-population formula") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> om(0.0, 20.0), gm(0.1, 5.0), nb(0.0, 3.0);
  for (int k = 0; k < 500; ++k) {
    const SystemParams p{om(rng), gm(rng), nb(rng)};
    const auto s = steady_state(p);
    CHECK(residual(p, s.bloch) < 1e-12 * p.gamma * p.thermal_factor());
    const double x = p.omega * p.omega / (p.gamma * p.gamma);
    const double c = p.thermal_factor();
    const double rho = (x + p.nbar * c) / (2.0 * x + c * c);
    CHECK(s.rho_aa == doctest::Approx(rho).epsilon(1e-13));
    CHECK(is_physical(s.bloch));
  }
}

TEST_CASE("printed steady-state inversion") {
  CHECK(paper_inversion_eq10({1.0, 1.0, 0.0}) == doctest::Approx(-1.0 / 3.0));
  CHECK(paper_inversion_eq10({1.0, 1.0, 0.5}) == doctest::Approx(-1.0 / 6.0));
  CHECK(steady_state({1.0, 1.0, 0.5}).inversion_w == doctest::Approx(-1.0 / 3.0));
  CHECK(paper_inversion_eq10({0.0, 1.0, 1.0}) == doctest::Approx(-1.0 / 3.0));
  CHECK(steady_state({0.0, 1.0, 1.0}).inversion_w == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("printed steady coherence only right at gamma = 1") {
  CHECK(paper_coherence_eq14({1.0, 1.0, 0.3}) ==
        doctest::Approx(steady_state({1.0, 1.0, 0.3}).bloch.sp.real()));
  CHECK(paper_coherence_eq14({1.0, 2.0, 0.0}) ==
        doctest::Approx(2.0 * steady_state({1.0, 2.0, 0.0}).bloch.sp.real()));
}

TEST_CASE("transient examples") {
  const SystemParams p{2.0, 1.0, 0.5};
  const BlochVector init{complex{0.1, 0.2}, complex{0.1, -0.2}, 0.3};
  const auto t0 = transient(p, init, 0.0);
  CHECK(t0.sm == init.sm);
  CHECK(t0.sz == init.sz);

  const auto late = transient(p, init, 50.0);
  const auto ss = steady_state(p);
  CHECK(std::abs(late.sm - ss.bloch.sm) < 1e-10);
  CHECK(std::abs(late.sz - ss.bloch.sz) < 1e-10);

  for (double t : {0.1, 1.0, 3.0}) {
    CHECK(transient({0.0, 1.0, 0.0}, BlochVector::excited(), t).sz ==
          doctest::Approx(2.0 * std::exp(-t) - 1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(transient(p, {0.0, 0.0, 2.0}, 1.0), UnphysicalState);
  CHECK_THROWS_AS(transient({-1.0, 1.0, 0.0}, init, 1.0), InvalidParams);
}

TEST_CASE("transient matches the density-matrix integrator") {
  for (double w : {0.0, 0.25, 1.0, 5.0}) {
    for (double n : {0.0, 0.5}) {
      const SystemParams p{w, 1.0, n};
      const auto cfg = oracle::IntegratorConfig::resolving(p, 4.0);
      const auto traj = oracle::evolve(p, {0.0, 1.0, 0.0}, cfg);
      for (std::size_t k = 0; k < traj.times.size(); k += 97) {
        const auto exact = transient(p, BlochVector::ground(), traj.times[k]);
        const auto num = bloch_from_density(traj.states[k]);
        CHECK(std::abs(exact.sm - num.sm) < 1e-8);
        CHECK(std::abs(exact.sz - num.sz) < 1e-8);
      }
    }
  }
}

TEST_CASE("transient is continuous across the degenerate point") {
  const BlochVector init = BlochVector::excited();
  for (double t : {0.3, 1.0, 4.0}) {
    const auto at = transient({0.25, 1.0, 0.0}, init, t);
    const auto below = transient({0.25 - 1e-7, 1.0, 0.0}, init, t);
    const auto above = transient({0.25 + 1e-7, 1.0, 0.0}, init, t);
    CHECK(std::abs(at.sz - below.sz) < 1e-6);
    CHECK(std::abs(at.sz - above.sz) < 1e-6);
    CHECK(std::abs(at.sm - above.sm) < 1e-6);
  }
}

TEST_CASE("printed sigma_z transient") {
  const BlochVector init = BlochVector::ground();
  for (double w : {0.1, 0.7, 3.0}) {
    for (double n : {0.0, 0.5}) {
      const SystemParams p{w, 1.0, n};
      for (double t : {0.2, 1.0, 5.0}) {
        CHECK(paper_inversion_eq6(p, init, t) == doctest::Approx(transient(p, init, t).sz).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("solve_affine constant part is the fixed point") {
  const SystemParams p{1.5, 1.0, 0.2};
  const auto ss = steady_state(p);
  const auto sol = solve_affine(p, {ss.bloch.sm, ss.bloch.sp, complex{ss.bloch.sz}}, 1.0);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(sol.components[i](2.0) - sol.components[i].constant()) < 1e-14);
  }
  CHECK(std::abs(sol.components[2].constant() - ss.bloch.sz) < 1e-15);
}
