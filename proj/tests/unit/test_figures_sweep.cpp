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
#include <cstdlib>
#include <stdexcept>

#include "qdl/figures.hpp"
#include "qdl/sweep.hpp"

using namespace qdl;

TEST_CASE("grid definition") {
  CHECK(GridSpec{"x", 0.0, 1.0, 5}.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(GridSpec{"x", 2.0, 2.0, 1}.values() == std::vector<double>{2.0});
  CHECK_THROWS_AS(GridSpec({"x", 0.0, 1.0, 1}).check(), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec({"x", 1.0, 0.0, 3}).check(), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec({"x", 0.0, 1.0, 0}).check(), std::invalid_argument);
}

TEST_CASE("figure datasets") {
  SUBCASE("inversion surface negative") {
    for (bool strict : {false, true}) {
      const auto f = figure(1, {strict});
      CHECK(f.table.rows.size() == 61 * 21);
      for (const auto& r : f.table.rows) CHECK(r[2] < 0.0);
    }
  }
  SUBCASE("population below one half") {
    const auto f = figure(2);
    CHECK(f.table.columns.size() == 5);
    for (const auto& r : f.table.rows) {
      for (std::size_t c = 1; c < r.size(); ++c) {
        CHECK(r[c] >= 0.0);
        CHECK(r[c] < 0.5);
      }
    }
  }
  SUBCASE("g2 curves start at zero") {
    const auto f = figure(6);
    CHECK(f.table.columns.size() == 4);
    for (std::size_t c = 1; c < 4; ++c) CHECK(std::abs(f.table.rows[0][c]) < 1e-12);
    for (const auto& p : f.params) CHECK(p.omega == 3.0);
  }
  SUBCASE("every figure builds") {
    for (int n = 1; n <= kFigureCount; ++n) {
      FigureOptions opt;
      opt.points = 41;
      const auto f = figure(n, opt);
      CHECK(f.number == n);
      CHECK_FALSE(f.table.rows.empty());
      for (const auto& r : f.table.rows) CHECK(r.size() == f.table.columns.size());
    }
  }
  CHECK_THROWS_AS(figure(0), std::out_of_range);
  CHECK_THROWS_AS(figure(10), std::out_of_range);
}

TEST_CASE("observable names round trip") {
  for (const auto& name : observable_names()) CHECK(observable_name(parse_observable(name)) == name);
  CHECK_THROWS_AS(parse_observable("nope"), std::invalid_argument);
}

TEST_CASE("sweep shape and ordering") {
  SweepConfig cfg;
  const Table t = run_sweep(cfg);
  CHECK(t.rows.size() == 1281);
  CHECK(t.columns[0] == "omega [gamma]");
  CHECK(t.rows[1][0] == 0.0);
  CHECK(t.rows[1][1] == doctest::Approx(0.05));
  CHECK(t.rows[21][0] == doctest::Approx(0.1));
}

TEST_CASE("sweep result does not depend on the thread count") {
  SweepConfig cfg;
  cfg.observable = Observable::kG2;
  cfg.omega = {"omega", 0.5, 5.0, 10};
  cfg.nbar = {"nbar", 0.0, 1.0, 7};
  cfg.threads = 1;
  const Table one = run_sweep(cfg);
  cfg.threads = 8;
  const Table many = run_sweep(cfg);
  CHECK(one.rows == many.rows);
}

TEST_CASE("var_x sweep brackets the pocket edge") {
  SweepConfig cfg;
  cfg.observable = Observable::kVarXNormal;
  cfg.omega = {"omega", 0.0, 1.5, 151};
  cfg.nbar = {"nbar", 0.0, 0.0, 1};
  const Table t = run_sweep(cfg);
  bool found = false;
  for (std::size_t k = 1; k < t.rows.size(); ++k) {
    if (t.rows[k - 1][2] < 0.0 && t.rows[k][2] >= 0.0) {
      CHECK(t.rows[k - 1][0] <= 1.0 / std::sqrt(2.0));
      CHECK(t.rows[k][0] >= 1.0 / std::sqrt(2.0));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("sweep errors propagate from workers") {
  SweepConfig cfg;
  cfg.observable = Observable::kG2;
  cfg.omega = {"omega", 0.0, 1.0, 3};
  cfg.nbar = {"nbar", 0.0, 1.0, 3};
  CHECK_THROWS_AS(run_sweep(cfg), std::exception);  // omega = nbar = 0 has no emission
  cfg.omega = {"omega", 0.0, 1.0, 1};
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("thread cap honours the environment") {
  ::setenv("QDL_THREADS", "3", 1);
  CHECK(thread_cap() == 3);
  ::setenv("QDL_THREADS", "junk", 1);
  CHECK(thread_cap() >= 1);
  ::unsetenv("QDL_THREADS");
}
