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

#include "qdl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qdl/correlators.hpp"
#include "qdl/dynamics.hpp"
#include "qdl/oracle.hpp"
#include "qdl/spectrum.hpp"
#include "qdl/squeezing.hpp"

namespace qdl {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  return out;
}

struct Grid {
  std::vector<double> omegas;
  std::vector<double> nbars;
};

Grid parameter_grid(bool quick) {
  if (quick) return {{0.0, 1.0, 5.0}, {0.0, 0.5}};
  return {{0.0, 0.5, 1.0, 2.0, 5.0, 10.0}, {0.0, 0.25, 0.5, 0.75}};
}

CheckResult upper_bound(std::string name, double measured, double tolerance, std::string detail = {}) {
  return {std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

std::string point(const SystemParams& p) {
  std::ostringstream os;
  os << "omega=" << p.omega << " nbar=" << p.nbar;
  return os.str();
}

CheckResult transient_check(const Grid& grid) {
  double worst = 0.0;
  std::string where;
  const auto times = linspace(0.0, 10.0, 64);
  const BlochVector inits[] = {BlochVector::excited(), {complex{0.3, 0.2}, complex{0.3, -0.2}, 0.1}};
  for (double w : grid.omegas) {
    for (double n : grid.nbars) {
      const SystemParams p{w, 1.0, n};
      for (const auto& init : inits) {
        const AffineSolution exact = transient_solution(p, init);
        const auto numeric = oracle::propagate(p, oracle::to_operator(density_from_bloch(init)), times,
                                               oracle::IntegratorConfig::resolving(p, 10.0));
        for (std::size_t k = 0; k < times.size(); ++k) {
          const Vec3c v = exact(times[k]);
          const auto& rho = numeric[k];
          const double err = std::max({std::abs(v[0] - rho(0, 1)), std::abs(v[1] - rho(1, 0)),
                                       std::abs(v[2] - (rho(0, 0) - rho(1, 1)))});
          if (err > worst) {
            worst = err;
            where = point(p);
          }
        }
      }
    }
  }
  return upper_bound("transient vs density-matrix RK4", worst, 1e-8, where);
}

CheckResult steady_check(const Grid& grid) {
  double worst = 0.0;
  for (double w : grid.omegas) {
    for (double n : grid.nbars) {
      const SystemParams p{w, 1.0, n};
      const SteadyState ss = steady_state(p);
      const Vec3c r = bloch_generator(p).apply({ss.bloch.sm, ss.bloch.sp, ss.bloch.sz});
      for (const auto& x : r) worst = std::max(worst, std::abs(x));
      const DensityMatrix rho = oracle::steady_numeric(p);
      worst = std::max({worst, std::abs(rho.rho_aa - ss.rho_aa), std::abs(rho.rho_ab - ss.bloch.sm)});
    }
  }
  return upper_bound("steady state residual and Liouvillian null space", worst, 1e-12);
}

void correlator_checks(const Grid& grid, std::vector<CheckResult>& out) {
  const auto taus = linspace(0.0, 10.0, 201);
  double dipole_err = 0.0;
  double intensity_err = 0.0;
  double g2_zero = 0.0;
  double g2_tail = 0.0;
  bool antibunched = true;
  for (double w : grid.omegas) {
    for (double n : grid.nbars) {
      const SystemParams p{w, 1.0, n};
      const ExponentialSum dipole = dipole_correlator(p);
      const auto dipole_num = oracle::correlator_numeric(p, oracle::CorrelatorKind::kDipole, taus);
      const ExponentialSum numerator = intensity_numerator(p);
      const auto numerator_num = oracle::correlator_numeric(p, oracle::CorrelatorKind::kIntensity, taus);
      for (std::size_t k = 0; k < taus.size(); ++k) {
        dipole_err = std::max(dipole_err, std::abs(dipole(taus[k]) - dipole_num[k]));
        intensity_err = std::max(intensity_err, std::abs(numerator(taus[k]) - numerator_num[k]));
      }
      if (steady_state(p).rho_aa <= 0.0) continue;
      const G2Function g(p);
      g2_zero = std::max(g2_zero, std::abs(g(0.0)));
      g2_tail = std::max(g2_tail, std::abs(g(50.0) - 1.0));
      const G2Curve curve = g2(p, linspace(0.0, 2.0, 401));
      antibunched = antibunched && classify_statistics(curve).antibunched;
    }
  }
  out.push_back(upper_bound("dipole correlator vs regression oracle", dipole_err, 1e-7));
  out.push_back(upper_bound("intensity correlator vs regression oracle", intensity_err, 1e-7));
  out.push_back(upper_bound("g2(0) = 0", g2_zero, 1e-12));
  out.push_back(upper_bound("|g2(50/gamma) - 1|", g2_tail, 1e-6));
  out.push_back({"antibunching at every emitting grid point", antibunched, antibunched ? 1.0 : 0.0, 1.0, {}});
}

void spectrum_checks(const Grid& grid, bool quick, std::vector<CheckResult>& out) {
  double fourier_err = 0.0;
  double sum_rule = 0.0;
  const std::vector<std::pair<double, double>> fourier_points =
      quick ? std::vector<std::pair<double, double>>{{1.0, 0.5}, {5.0, 0.0}}
            : std::vector<std::pair<double, double>>{{0.0, 0.5}, {1.0, 0.0}, {2.0, 0.25}, {5.0, 0.5}, {10.0, 0.75}};
  for (const auto& [w, n] : fourier_points) {
    const SystemParams p{w, 1.0, n};
    const SpectrumDecomposition d = decompose(p);
    const double half = 2.0 * w + 10.0;
    const auto omegas = linspace(-half, half, quick ? 21 : 41);
    const double rate = p.dipole_rate();
    const double tau_max = 40.0 / rate;
    const double h = 0.05 / (half + w + p.gamma * p.thermal_factor());
    const auto count = static_cast<std::size_t>(std::ceil(tau_max / h)) + 1;
    const auto taus = linspace(0.0, tau_max, count);
    auto series = oracle::correlator_numeric(p, oracle::CorrelatorKind::kDipole, taus);
    const complex coherent = series.back();
    for (auto& c : series) c -= coherent;
    const auto numeric = oracle::fourier_numeric(series, taus, omegas, rate);
    for (std::size_t k = 0; k < omegas.size(); ++k) {
      fourier_err = std::max(fourier_err, std::abs(d.evaluate(omegas[k]) - numeric[k]));
    }
  }
  for (double w : grid.omegas) {
    for (double n : grid.nbars) {
      const SystemParams p{w, 1.0, n};
      const SpectrumDecomposition d = decompose(p);
      const double population = steady_state(p).rho_aa;
      if (population <= 0.0) continue;
      const double total = (d.coherent_weight + integrate_incoherent(d, w + p.gamma)) /
                           (2.0 * std::numbers::pi);
      sum_rule = std::max(sum_rule, std::abs(total - population) / population);
    }
  }
  out.push_back(upper_bound("spectrum vs Fourier quadrature of oracle correlator", fourier_err, 1e-6));
  out.push_back(upper_bound("spectral power sum rule (relative)", sum_rule, 1e-3));
}

void squeezing_checks(const Grid& grid, std::vector<CheckResult>& out) {
  double lowest = 1.0;
  double at = 0.0;
  for (double w = 0.0; w <= 1.5; w += 1e-4) {
    const double v = quadrature_variances({w, 1.0, 0.0}).var_x_normal;
    if (v < lowest) {
      lowest = v;
      at = w;
    }
  }
  out.push_back(upper_bound("min var_x at nbar=0 equals -1/16", std::abs(lowest + 1.0 / 16.0), 1e-6));
  out.push_back(upper_bound("argmin var_x at nbar=0 equals 1/sqrt6 (scan resolution)",
                            std::abs(at - 1.0 / std::sqrt(6.0)), 1e-4));

  const auto pockets = squeezing_scan(0.0, 0.0, 2.0, 1e-3);
  const double edge = pockets.size() == 1 ? pockets[0].hi : 0.0;
  out.push_back(upper_bound("squeezing pocket edge at nbar=0 equals 1/sqrt2",
                            std::abs(edge - 1.0 / std::sqrt(2.0)), 1e-6));

  double previous = 1.0;
  bool shrinking = true;
  for (double n : {0.0, 0.01, 0.02, 0.03, 0.04}) {
    double width = 0.0;
    for (const auto& iv : squeezing_scan(n, 0.0, 2.0, 1e-3)) width += iv.hi - iv.lo;
    shrinking = shrinking && width < previous;
    previous = width;
  }
  out.push_back({"squeezing pockets shrink as nbar grows", shrinking, shrinking ? 1.0 : 0.0, 1.0, {}});

  double min_y = 1.0;
  bool uncertainty = true;
  for (double w : grid.omegas) {
    for (double n : grid.nbars) {
      const SystemParams p{w, 1.0, n};
      min_y = std::min(min_y, quadrature_variances(p).var_y_normal);
      try {
        uncertainty_check(p);
      } catch (const UncertaintyViolation&) {
        uncertainty = false;
      }
    }
  }
  out.push_back({"var_y_normal >= 0", min_y >= 0.0, min_y, 0.0, {}});
  out.push_back({"quadrature uncertainty relation", uncertainty, uncertainty ? 1.0 : 0.0, 1.0, {}});
}

void printed_formula_checks(const Grid& grid, std::vector<CheckResult>& out) {
  double eq6 = 0.0;
  double eq24 = 0.0;
  const BlochVector init{complex{0.2, 0.1}, complex{0.2, -0.1}, 0.3};
  for (double w : grid.omegas) {
    for (double n : grid.nbars) {
      const SystemParams p{w, 1.0, n};
      if (eigentriple(p).degenerate) continue;
      for (double t : {0.0, 0.3, 1.0, 4.0}) {
        eq6 = std::max(eq6, std::abs(paper_inversion_eq6(p, init, t) - transient(p, init, t).sz));
        if (steady_state(p).rho_aa > 0.0) {
          eq24 = std::max(eq24, std::abs(paper_g2_eq24(p, t) - G2Function(p)(t)));
        }
      }
    }
  }
  out.push_back(upper_bound("printed sigma_z transient agrees with exact", eq6, 1e-12));
  out.push_back(upper_bound("printed g2 closed form agrees with exact", eq24, 1e-10));
}

Finding drive_sign_finding() {
  const SystemParams p{1.0, 1.0, 0.0};
  const auto rho = oracle::to_operator(oracle::steady_numeric(p));
  const complex printed = oracle::lindblad_rhs(p, rho, oracle::DriveForm::kAsPrinted).trace();
  const complex exact = oracle::lindblad_rhs(p, rho).trace();
  Finding f;
  f.id = "master-equation-drive-sign";
  f.summary = "printed drive term has -rho sigma_- where the commutator gives +rho sigma_-; "
              "the printed form does not conserve trace (d Tr rho/dt shown at omega=1, nbar=0 steady state)";
  f.printed = printed.real();
  f.exact = exact.real();
  f.ratio = 0.0;
  return f;
}

Finding inversion_finding(bool strict) {
  const SystemParams p{1.0, 1.0, 0.5};
  Finding f;
  f.id = "steady-inversion-closed-form";
  f.summary = "printed steady-state inversion misses the (2n+1)^2 factor on the drive term; "
              "values shown at omega=gamma, nbar=0.5";
  f.printed = paper_inversion_eq10(p);
  f.exact = steady_state(p).inversion_w;
  f.ratio = f.exact / f.printed;
  if (strict) {
    for (double n : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const SystemParams q{1.0, 1.0, n};
      std::ostringstream os;
      os.precision(17);
      os << "omega=1 nbar=" << n << " printed=" << paper_inversion_eq10(q)
         << " exact=" << steady_state(q).inversion_w
         << " ratio=" << steady_state(q).inversion_w / paper_inversion_eq10(q)
         << " (2n+1)=" << q.thermal_factor();
      f.detail.push_back(os.str());
    }
  }
  return f;
}

Finding dipole_factor_finding() {
  const SystemParams weak{0.0, 1.0, 0.5};
  Finding f;
  f.id = "dipole-correlator-factor-2";
  f.summary = "printed dipole correlator (general and weak-drive forms) carries a leading factor 2, "
              "so its tau=0 value is 2 rho_aa; values shown at omega=0, nbar=0.5, tau=0";
  f.printed = paper_dipole_eq18(weak, 0.0);
  f.exact = dipole_correlator(weak)(0.0).real();
  f.ratio = f.printed / f.exact;
  const SystemParams drive{1.0, 1.0, 0.5};
  std::ostringstream os;
  os.precision(17);
  os << "general printed form at omega=1 nbar=0.5 tau=0: " << paper_dipole_eq13(drive, 0.0).real()
     << " vs exact " << dipole_correlator(drive)(0.0).real();
  f.detail.push_back(os.str());
  return f;
}

Finding coherence_finding() {
  const SystemParams p{1.0, 2.0, 0.0};
  Finding f;
  f.id = "steady-coherence-gamma-power";
  f.summary = "printed steady-state coherence omega gamma^2/(2 alpha beta) has one power of gamma too "
              "many; only correct for gamma=1 (values shown at omega=1, gamma=2, nbar=0)";
  f.printed = paper_coherence_eq14(p);
  f.exact = steady_state(p).bloch.sp.real();
  f.ratio = f.printed / f.exact;
  return f;
}

Finding squeezing_pocket_finding() {
  Finding f;
  f.id = "squeezing-pockets-nbar-0.05-0.15";
  f.summary = "no squeezing pockets at nbar in {0.05, 0.1, 0.15} from either steady-state path; "
              "printed value/exact value give the number of pockets found (verbatim/corrected)";
  std::size_t printed = 0;
  std::size_t exact = 0;
  for (double n : {0.05, 0.1, 0.15}) {
    printed += squeezing_scan(n, 0.0, 5.0, 1e-3, FormulaPath::kPaperVerbatim).size();
    exact += squeezing_scan(n, 0.0, 5.0, 1e-3, FormulaPath::kCorrected).size();
  }
  f.printed = static_cast<double>(printed);
  f.exact = static_cast<double>(exact);
  // Largest nbar (0.001 steps) that still squeezes on each path.
  for (FormulaPath path : {FormulaPath::kCorrected, FormulaPath::kPaperVerbatim}) {
    double last = 0.0;
    for (int k = 0; k <= 200; ++k) {
      const double n = 0.001 * k;
      if (!squeezing_scan(n, 0.0, 3.0, 1e-3, path).empty()) last = n;
    }
    std::ostringstream os;
    os << to_string(path) << " path: squeezing survives up to nbar ~ " << last;
    f.detail.push_back(os.str());
  }
  return f;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const Grid grid = parameter_grid(options.quick);
  VerifyReport report;
  report.checks.push_back(transient_check(grid));
  report.checks.push_back(steady_check(grid));
  correlator_checks(grid, report.checks);
  spectrum_checks(grid, options.quick, report.checks);
  squeezing_checks(grid, report.checks);
  printed_formula_checks(grid, report.checks);

  report.findings.push_back(drive_sign_finding());
  report.findings.push_back(inversion_finding(options.strict_paper));
  report.findings.push_back(dipole_factor_finding());
  report.findings.push_back(coherence_finding());
  report.findings.push_back(squeezing_pocket_finding());
  return report;
}

}  // namespace qdl
