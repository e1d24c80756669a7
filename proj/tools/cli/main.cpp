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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

void add_common(CLI::App* sub, qdl::cli::RunConfig& cfg) {
  sub->add_option("--omega", cfg.params.omega, "drive amplitude [gamma]");
  sub->add_option("--gamma", cfg.params.gamma, "damping constant");
  sub->add_option("--nbar", cfg.params.nbar, "thermal photon number");
  sub->add_option("--tau-max", cfg.tau_max, "largest time or delay [1/gamma]");
  sub->add_option("--omega-window", cfg.omega_window,
                  "spectrum half-width / squeezing omega upper bound (0 = default)");
  sub->add_option("--points", cfg.points, "samples per axis");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--plot", cfg.plot, "also write <out>.gp (needs --out)");
  sub->add_flag("--strict-paper", cfg.strict_paper, "use the verbatim printed formulas");
}

}  // namespace

int main(int argc, char** argv) {
  qdl::cli::RunConfig cfg;
  CLI::App app{"qdl: driven two-level atom in a thermal reservoir"};
  app.set_version_flag("--version", std::string(qdl::cli::kVersion));
  app.require_subcommand(1);

  std::string omega_range = "0:6:61";
  std::string nbar_range = "0:1:21";
  std::string observable = "inversion_w";

  auto* steady = app.add_subcommand("steady", "steady-state inversion, population and coherence");
  auto* dynamics = app.add_subcommand("dynamics", "transient Bloch vector");
  auto* spectrum = app.add_subcommand("spectrum", "incoherent emission spectrum");
  auto* g2 = app.add_subcommand("g2", "normalised second-order correlation");
  auto* squeezing = app.add_subcommand("squeezing", "quadrature variances versus drive");
  auto* figure = app.add_subcommand("figure", "regenerate a figure dataset (1-9)");
  auto* verify = app.add_subcommand("verify", "self-consistency checks against the numerical oracle");
  auto* sweep = app.add_subcommand("sweep", "observable over an (omega, nbar) grid");

  for (auto* sub : {steady, dynamics, spectrum, g2, squeezing, figure, verify, sweep}) {
    add_common(sub, cfg);
  }
  dynamics->add_option("--init", cfg.init, "initial state")
      ->check(CLI::IsMember({"ground", "excited", "mixed"}));
  figure->add_option("number", cfg.figure, "figure number")->required()->check(CLI::Range(1, 9));
  verify->add_flag("--quick", cfg.quick, "reduced grid");
  sweep->add_option("--observable", observable, "one of: " + [] {
    std::string s;
    for (const auto& n : qdl::observable_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  sweep->add_option("--omega-range", omega_range, "lo:hi:count");
  sweep->add_option("--nbar-range", nbar_range, "lo:hi:count");
  sweep->add_option("--tau", cfg.sweep.tau, "delay for the g2 observable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.plot && cfg.out.empty()) {
    std::cerr << "qdl: --plot requires --out\n";
    return 2;
  }
  if (cfg.command == "sweep") {
    try {
      cfg.sweep.observable = qdl::parse_observable(observable);
      cfg.sweep.omega = qdl::cli::parse_grid("omega", omega_range);
      cfg.sweep.nbar = qdl::cli::parse_grid("nbar", nbar_range);
    } catch (const std::exception& e) {
      std::cerr << "qdl sweep: " << e.what() << '\n';
      return 2;
    }
  }
  return qdl::cli::run(cfg, std::cout, std::cerr);
}
