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

#include "qdl/figures.hpp"

#include <sstream>
#include <stdexcept>

#include "qdl/correlators.hpp"
#include "qdl/dynamics.hpp"
#include "qdl/spectrum.hpp"

namespace qdl {

namespace {

const std::vector<double> kCurveNbar = {0.25, 0.5, 0.75};

std::string nbar_label(const std::string& quantity, double nbar, const std::string& unit) {
  std::ostringstream os;
  os << quantity << " nbar=" << nbar << " [" << unit << "]";
  return os.str();
}

FigureData inversion_surface(const FigureOptions& opt) {
  FigureData fig;
  fig.number = 1;
  fig.title = "steady-state atomic inversion W(omega, nbar)";
  fig.path = opt.strict_paper ? FormulaPath::kPaperVerbatim : FormulaPath::kCorrected;
  const GridSpec omega{"omega", 0.0, 6.0, 61};
  const GridSpec nbar{"nbar", 0.0, 1.0, 21};
  fig.grids = {omega, nbar};
  fig.table.columns = {"omega [gamma]", "nbar [1]", "inversion_w [1]"};
  for (double w : omega.values()) {
    for (double n : nbar.values()) {
      const SystemParams p{w, 1.0, n};
      const double inv = opt.strict_paper ? paper_inversion_eq10(p) : steady_state(p).inversion_w;
      fig.table.rows.push_back({w, n, inv});
    }
  }
  if (opt.strict_paper) {
    fig.notes.push_back("printed closed-form inversion; differs from the Bloch-equation fixed point whenever nbar > 0");
  }
  return fig;
}

FigureData excited_population(const FigureOptions& opt) {
  FigureData fig;
  fig.number = 2;
  fig.title = "steady-state excited-state probability rho_aa vs omega";
  fig.path = opt.strict_paper ? FormulaPath::kPaperVerbatim : FormulaPath::kCorrected;
  const GridSpec omega{"omega", 0.0, 6.0, opt.points};
  fig.grids = {omega};
  const std::vector<double> nbars = {0.0, 0.25, 0.5, 0.75};
  fig.table.columns = {"omega [gamma]"};
  for (double n : nbars) {
    fig.table.columns.push_back(nbar_label("rho_aa", n, "1"));
    fig.params.push_back({0.0, 1.0, n});
  }
  for (double w : omega.values()) {
    std::vector<double> row{w};
    for (double n : nbars) row.push_back(steady_state({w, 1.0, n}).rho_aa);
    fig.table.rows.push_back(std::move(row));
  }
  fig.notes.push_back("printed excited-population formula coincides with the exact fixed point; both paths give identical data");
  return fig;
}

FigureData emission_spectrum(int number, double drive, std::vector<double> nbars,
                             const FigureOptions& opt) {
  FigureData fig;
  fig.number = number;
  std::ostringstream title;
  title << "incoherent emission spectrum at omega = " << drive << " gamma";
  fig.title = title.str();
  fig.path = opt.strict_paper ? FormulaPath::kPaperVerbatim : FormulaPath::kCorrected;
  const double half = opt.omega_window > 0.0 ? opt.omega_window : 2.0 * drive + 10.0;
  const GridSpec axis{"omega_detuning", -half, half, opt.points};
  fig.grids = {axis};
  fig.table.columns = {"omega_detuning [gamma]"};
  std::vector<SpectrumDecomposition> decomps;
  for (double n : nbars) {
    const SystemParams p{drive, 1.0, n};
    fig.params.push_back(p);
    fig.table.columns.push_back(nbar_label("S", n, "1/gamma"));
    decomps.push_back(decompose(p));
    std::ostringstream note;
    note << "nbar=" << n << ": coherent delta weight at omega=0 is " << decomps.back().coherent_weight
         << " (not rasterized)";
    fig.notes.push_back(note.str());
  }
  for (double w : axis.values()) {
    std::vector<double> row{w};
    for (std::size_t k = 0; k < nbars.size(); ++k) {
      row.push_back(opt.strict_paper ? mollow_strong(fig.params[k], w) : decomps[k].evaluate(w));
    }
    fig.table.rows.push_back(std::move(row));
  }
  if (opt.strict_paper) {
    fig.notes.push_back("strict-paper path plots the strong-drive three-Lorentzian form");
  }
  return fig;
}

FigureData g2_figure(int number, double drive, const FigureOptions& opt) {
  FigureData fig;
  fig.number = number;
  std::ostringstream title;
  title << "second-order correlation g2(tau) at omega = " << drive << " gamma";
  fig.title = title.str();
  fig.path = opt.strict_paper ? FormulaPath::kPaperVerbatim : FormulaPath::kCorrected;
  const GridSpec tau{"tau", 0.0, opt.tau_max, opt.points};
  fig.grids = {tau};
  fig.table.columns = {"tau [1/gamma]"};
  std::vector<G2Function> curves;
  for (double n : kCurveNbar) {
    const SystemParams p{drive, 1.0, n};
    fig.params.push_back(p);
    fig.table.columns.push_back(nbar_label("g2", n, "1"));
    curves.emplace_back(p);
  }
  for (double t : tau.values()) {
    std::vector<double> row{t};
    for (std::size_t k = 0; k < curves.size(); ++k) {
      row.push_back(opt.strict_paper ? paper_g2_eq24(fig.params[k], t) : curves[k](t));
    }
    fig.table.rows.push_back(std::move(row));
  }
  return fig;
}

FigureData squeezing_figure(const FigureOptions& opt) {
  FigureData fig;
  fig.number = 9;
  fig.title = "normal-ordered quadrature variance var_x vs omega";
  fig.path = opt.strict_paper ? FormulaPath::kPaperVerbatim : FormulaPath::kCorrected;
  const GridSpec omega{"omega", 0.0, 2.0, opt.points};
  fig.grids = {omega};
  const std::vector<double> nbars = {0.05, 0.1, 0.15};
  fig.table.columns = {"omega [gamma]"};
  for (double n : nbars) {
    fig.params.push_back({0.0, 1.0, n});
    fig.table.columns.push_back(nbar_label("var_x_normal", n, "1"));
    const auto pockets = squeezing_scan(n, 0.0, 2.0, 1e-3, fig.path);
    std::ostringstream note;
    note << "nbar=" << n << ": " << pockets.size() << " squeezing pocket(s) on omega in [0, 2]";
    fig.notes.push_back(note.str());
  }
  for (double w : omega.values()) {
    std::vector<double> row{w};
    for (double n : nbars) row.push_back(quadrature_variances({w, 1.0, n}, fig.path).var_x_normal);
    fig.table.rows.push_back(std::move(row));
  }
  return fig;
}

}  // namespace

FigureData figure(int n, const FigureOptions& options) {
  if (options.points < 2) throw std::invalid_argument("figure needs at least 2 points");
  switch (n) {
    case 1:
      return inversion_surface(options);
    case 2:
      return excited_population(options);
    case 3:
      return emission_spectrum(3, 10.0, {0.5}, options);
    case 4:
      return emission_spectrum(4, 2.5, kCurveNbar, options);
    case 5:
      return emission_spectrum(5, 5.0, kCurveNbar, options);
    case 6:
      return g2_figure(6, 3.0, options);
    case 7:
      return g2_figure(7, 4.0, options);
    case 8:
      return g2_figure(8, 5.0, options);
    case 9:
      return squeezing_figure(options);
    default:
      throw std::out_of_range("figure number must be in 1..9");
  }
}

}  // namespace qdl
