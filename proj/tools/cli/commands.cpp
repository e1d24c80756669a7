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

#include "cli/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "cli/output.hpp"
#include "qdl/correlators.hpp"
#include "qdl/dynamics.hpp"
#include "qdl/figures.hpp"
#include "qdl/spectrum.hpp"
#include "qdl/squeezing.hpp"
#include "qdl/verify.hpp"

namespace qdl::cli {

namespace {

using nlohmann::json;

json params_json(const SystemParams& p) {
  return {{"omega", p.omega}, {"gamma", p.gamma}, {"nbar", p.nbar}};
}

struct Result {
  Table table;
  json params = json::object();
  json grids = json::array();
  std::string formula_path = "corrected";
  json extra = json::object();
  std::string title;
  bool surface = false;
};

Result steady(const RunConfig& cfg) {
  const SystemParams& p = cfg.params;
  const SteadyState ss = steady_state(p);
  Result r;
  r.title = "steady state";
  r.params = params_json(p);
  if (cfg.strict_paper) {
    r.formula_path = "paper-verbatim";
    r.table.columns = {"omega [gamma]", "nbar [1]", "inversion_w [1]", "rho_aa [1]", "sigma_plus [1]"};
    const double w = paper_inversion_eq10(p);
    r.table.rows.push_back({p.omega, p.nbar, w, 0.5 * (1.0 + w), paper_coherence_eq14(p)});
  } else {
    r.table.columns = {"omega [gamma]", "nbar [1]", "inversion_w [1]", "rho_aa [1]", "sigma_plus [1]"};
    r.table.rows.push_back({p.omega, p.nbar, ss.inversion_w, ss.rho_aa, ss.bloch.sp.real()});
  }
  return r;
}

BlochVector initial_state(const std::string& name) {
  if (name == "ground") return BlochVector::ground();
  if (name == "excited") return BlochVector::excited();
  if (name == "mixed") return {0.0, 0.0, 0.0};
  throw std::invalid_argument("unknown initial state '" + name + "' (ground|excited|mixed)");
}

Result dynamics(const RunConfig& cfg) {
  const GridSpec t{"t", 0.0, cfg.tau_max, cfg.points};
  const AffineSolution sol = transient_solution(cfg.params, initial_state(cfg.init));
  Result r;
  r.title = "transient Bloch vector";
  r.params = params_json(cfg.params);
  r.grids.push_back(grid_to_json(t));
  r.extra["init"] = cfg.init;
  r.table.columns = {"t [1/gamma]", "re_sigma_minus [1]", "im_sigma_minus [1]", "sigma_z [1]", "rho_aa [1]"};
  for (double time : t.values()) {
    const Vec3c v = sol(time);
    const double sz = v[2].real();
    r.table.rows.push_back({time, v[0].real(), v[0].imag(), sz, 0.5 * (1.0 + sz)});
  }
  return r;
}

Result spectrum(const RunConfig& cfg) {
  const SystemParams& p = cfg.params;
  const double half = cfg.omega_window > 0.0 ? cfg.omega_window : 2.0 * p.omega + 10.0 * p.gamma;
  const GridSpec axis{"omega_detuning", -half, half, cfg.points};
  const SpectrumDecomposition d = decompose(p);
  Result r;
  r.title = "incoherent emission spectrum";
  r.params = params_json(p);
  r.grids.push_back(grid_to_json(axis));
  r.table.columns = {"omega_detuning [gamma]", "S_inc [1/gamma]", "S_strong_drive [1/gamma]"};
  for (double w : axis.values()) r.table.rows.push_back({w, d.evaluate(w), mollow_strong(p, w)});
  r.extra["coherent_weight"] = d.coherent_weight;
  json found = json::array();
  for (const Peak& peak : peaks(d, {-half, half})) {
    found.push_back({{"center", peak.center}, {"height", peak.height}, {"fwhm", peak.fwhm}});
  }
  r.extra["peaks"] = found;
  return r;
}

Result g2_curve(const RunConfig& cfg) {
  const SystemParams& p = cfg.params;
  const GridSpec tau{"tau", 0.0, cfg.tau_max, cfg.points};
  const G2Curve curve = g2(p, tau.values());
  Result r;
  r.title = "second-order correlation";
  r.params = params_json(p);
  r.grids.push_back(grid_to_json(tau));
  r.table.columns = {"tau [1/gamma]", "g2 [1]", "g2_strong_drive [1]"};
  for (std::size_t k = 0; k < curve.tau.size(); ++k) {
    r.table.rows.push_back({curve.tau[k], curve.values[k], g2_strong(p, curve.tau[k])});
  }
  const StatisticsReport stats = classify_statistics(curve);
  r.extra["antibunched"] = stats.antibunched;
  json regions = json::array();
  for (const auto& reg : stats.regions) {
    regions.push_back({{"tau_begin", reg.tau_begin}, {"tau_end", reg.tau_end}, {"kind", to_string(reg.kind)}});
  }
  r.extra["regions"] = regions;
  return r;
}

Result squeezing(const RunConfig& cfg) {
  const SystemParams& p = cfg.params;
  const double hi = cfg.omega_window > 0.0 ? cfg.omega_window : 2.0 * p.gamma;
  const GridSpec omega{"omega", 0.0, hi, cfg.points};
  const FormulaPath path = cfg.strict_paper ? FormulaPath::kPaperVerbatim : FormulaPath::kCorrected;
  Result r;
  r.title = "normal-ordered quadrature variances";
  r.params = params_json(p);
  r.grids.push_back(grid_to_json(omega));
  r.formula_path = to_string(path);
  r.table.columns = {"omega [gamma]", "var_x_normal [1]", "var_y_normal [1]"};
  for (double w : omega.values()) {
    const QuadratureReport q = quadrature_variances({w, p.gamma, p.nbar}, path);
    r.table.rows.push_back({w, q.var_x_normal, q.var_y_normal});
  }
  json pockets = json::array();
  for (const auto& iv : squeezing_scan(p.nbar, 0.0, hi, hi / 1000.0, path, p.gamma)) {
    pockets.push_back({iv.lo, iv.hi});
  }
  r.extra["squeezing_pockets"] = pockets;
  return r;
}

Result figure_result(const RunConfig& cfg) {
  FigureOptions opt;
  opt.strict_paper = cfg.strict_paper;
  opt.points = cfg.points;
  opt.tau_max = cfg.tau_max;
  opt.omega_window = cfg.omega_window;
  FigureData fig = figure(cfg.figure, opt);
  Result r;
  r.title = fig.title;
  r.table = std::move(fig.table);
  r.params = json::array();
  for (const auto& p : fig.params) r.params.push_back(params_json(p));
  for (const auto& g : fig.grids) r.grids.push_back(grid_to_json(g));
  r.formula_path = to_string(fig.path);
  r.extra["figure"] = fig.number;
  r.extra["notes"] = fig.notes;
  r.surface = fig.number == 1;
  return r;
}

Result sweep(const RunConfig& cfg) {
  SweepConfig sc = cfg.sweep;
  sc.gamma = cfg.params.gamma;
  Result r;
  r.title = "parameter sweep: " + observable_name(sc.observable);
  r.table = run_sweep(sc);
  r.params = {{"gamma", sc.gamma}, {"tau", sc.tau}};
  r.grids.push_back(grid_to_json(sc.omega));
  r.grids.push_back(grid_to_json(sc.nbar));
  r.extra["observable"] = observable_name(sc.observable);
  return r;
}

std::string basename(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

void emit(const RunConfig& cfg, const Result& r, std::ostream& out) {
  json meta = {{"command", cfg.command},
               {"params", r.params},
               {"grids", r.grids},
               {"formula_path", r.formula_path},
               {"version", kVersion},
               {"columns", r.table.columns}};
  for (const auto& [key, value] : r.extra.items()) meta[key] = value;

  std::ostringstream data;
  if (cfg.format == "json") {
    json doc = table_to_json(r.table);
    doc["metadata"] = meta;
    data << doc.dump(2) << '\n';
  } else {
    write_csv(r.table, data);
  }

  if (cfg.out.empty()) {
    out << data.str();
    return;
  }
  write_file(cfg.out, data.str());
  write_file(cfg.out + ".meta.json", meta.dump(2) + "\n");
  if (cfg.plot) {
    write_file(cfg.out + ".gp", plot_script(r.table, basename(cfg.out), r.title, r.surface));
  }
}

int verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.quick = cfg.quick;
  opt.strict_paper = cfg.strict_paper;
  const VerifyReport report = run_verify(opt);

  json checks = json::array();
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << format_double(c.measured)
        << " tol=" << format_double(c.tolerance);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"measured", c.measured},
                      {"tolerance", c.tolerance}, {"detail", c.detail}});
  }
  out << report.findings.size() << " discrepancies in printed formulas (informational):\n";
  json findings = json::array();
  for (const auto& f : report.findings) {
    out << "  [" << f.id << "] " << f.summary << "\n    printed=" << format_double(f.printed)
        << " exact=" << format_double(f.exact) << " ratio=" << format_double(f.ratio) << '\n';
    for (const auto& line : f.detail) out << "    " << line << '\n';
    findings.push_back({{"id", f.id}, {"summary", f.summary}, {"printed", f.printed},
                        {"exact", f.exact}, {"ratio", f.ratio}, {"detail", f.detail}});
  }
  out << (report.ok() ? "verify: all checks passed\n" : "verify: FAILED\n");

  if (!cfg.out.empty()) {
    json doc = {{"command", "verify"},
                {"params", json::object()},
                {"grids", json::array()},
                {"formula_path", "corrected"},
                {"version", kVersion},
                {"quick", cfg.quick},
                {"checks", checks},
                {"findings", findings},
                {"ok", report.ok()}};
    write_file(cfg.out, doc.dump(2) + "\n");
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

GridSpec parse_grid(const std::string& name, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
    return v;
  };
  GridSpec g;
  g.name = name;
  try {
    if (parts.size() == 1) {
      g.lo = g.hi = number(parts[0]);
      g.count = 1;
    } else if (parts.size() == 3) {
      g.lo = number(parts[0]);
      g.hi = number(parts[1]);
      const double count = number(parts[2]);
      if (count < 1 || count != static_cast<double>(static_cast<std::size_t>(count))) {
        throw std::invalid_argument("count must be a positive integer");
      }
      g.count = static_cast<std::size_t>(count);
    } else {
      throw std::invalid_argument("expected lo:hi:count");
    }
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(name + " grid '" + text + "': " + e.what());
  }
  g.check();
  return g;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg.params);
    if (cfg.format != "csv" && cfg.format != "json") {
      throw std::invalid_argument("format must be csv or json");
    }
    if (cfg.points < 2) throw std::invalid_argument("--points must be >= 2");
    if (cfg.command == "verify") return verify(cfg, out);

    Result r;
    if (cfg.command == "steady") {
      r = steady(cfg);
    } else if (cfg.command == "dynamics") {
      r = dynamics(cfg);
    } else if (cfg.command == "spectrum") {
      r = spectrum(cfg);
    } else if (cfg.command == "g2") {
      r = g2_curve(cfg);
    } else if (cfg.command == "squeezing") {
      r = squeezing(cfg);
    } else if (cfg.command == "figure") {
      r = figure_result(cfg);
    } else if (cfg.command == "sweep") {
      r = sweep(cfg);
    } else {
      throw std::invalid_argument("unknown command '" + cfg.command + "'");
    }
    emit(cfg, r, out);
    return 0;
  } catch (const std::exception& e) {
    err << "qdl " << cfg.command << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qdl::cli
