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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/output.hpp"

using namespace qdl;
using namespace qdl::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_capture(const RunConfig& cfg, std::string& out, std::string& err) {
  std::ostringstream o, e;
  const int rc = run(cfg, o, e);
  out = o.str();
  err = e.str();
  return rc;
}

}  // namespace

TEST_CASE("number formatting round trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.0 / 3.0) == "-0.33333333333333331");
  CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("csv layout") {
  Table t{{"a [1]", "b [1]"}, {{1.0, 2.5}, {3.0, -4.0}}};
  std::ostringstream os;
  write_csv(t, os);
  CHECK(os.str() == "a [1],b [1]\n1,2.5\n3,-4\n");
}

TEST_CASE("grid parsing") {
  const auto g = parse_grid("omega", "0:6:61");
  CHECK(g.count == 61);
  CHECK(g.hi == 6.0);
  CHECK(parse_grid("nbar", "0.5").count == 1);
  CHECK_THROWS_AS(parse_grid("omega", "0:6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("omega", "0:6:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("omega", "0:6:2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("omega", "6:0:5"), std::invalid_argument);
}

TEST_CASE("commands write data, sidecar and plot script") {
  const fs::path dir = fs::temp_directory_path() / "qdl_cli_test";
  fs::create_directories(dir);
  RunConfig cfg;
  cfg.command = "g2";
  cfg.params = {3.0, 1.0, 0.25};
  cfg.points = 11;
  cfg.out = (dir / "g2.csv").string();
  cfg.plot = true;
  std::string out, err;
  REQUIRE(run_capture(cfg, out, err) == 0);
  CHECK(out.empty());
  const std::string csv = slurp(dir / "g2.csv");
  CHECK(csv.rfind("tau [1/gamma],g2 [1]", 0) == 0);
  const auto meta = nlohmann::json::parse(slurp(dir / "g2.csv.meta.json"));
  for (const char* key : {"command", "params", "grids", "formula_path", "version", "columns"}) {
    CHECK(meta.contains(key));
  }
  CHECK(meta["command"] == "g2");
  CHECK(fs::exists(dir / "g2.csv.gp"));
  fs::remove_all(dir);
}

TEST_CASE("every command runs and is deterministic") {
  for (const char* name : {"steady", "dynamics", "spectrum", "g2", "squeezing", "figure", "sweep"}) {
    RunConfig cfg;
    cfg.command = name;
    cfg.params = {2.0, 1.0, 0.5};
    cfg.points = 21;
    cfg.figure = 4;
    cfg.sweep.omega = {"omega", 0.0, 2.0, 5};
    cfg.sweep.nbar = {"nbar", 0.0, 1.0, 3};
    for (const char* format : {"csv", "json"}) {
      cfg.format = format;
      std::string a, b, err;
      CHECK(run_capture(cfg, a, err) == 0);
      CHECK(run_capture(cfg, b, err) == 0);
      CHECK(!a.empty());
      CHECK(a == b);
    }
  }
}

TEST_CASE("command errors") {
  std::string out, err;
  RunConfig cfg;
  cfg.command = "steady";
  cfg.params.omega = -1.0;
  CHECK(run_capture(cfg, out, err) == 2);
  CHECK(err.find("negative drive") != std::string::npos);

  cfg.params.omega = 1.0;
  cfg.out = "/nonexistent-dir/out.csv";
  CHECK(run_capture(cfg, out, err) == 2);

  cfg.out.clear();
  cfg.command = "bogus";
  CHECK(run_capture(cfg, out, err) == 2);

  cfg.command = "figure";
  cfg.figure = 12;
  CHECK(run_capture(cfg, out, err) == 2);

  cfg.command = "g2";
  cfg.params = {0.0, 1.0, 0.0};
  CHECK(run_capture(cfg, out, err) == 2);
  CHECK(err.find("no emission") != std::string::npos);
}

TEST_CASE("verify quick passes") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.quick = true;
  std::string out, err;
  CHECK(run_capture(cfg, out, err) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
}
