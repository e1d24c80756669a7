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

#include "qdl/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qdl/correlators.hpp"
#include "qdl/dynamics.hpp"
#include "qdl/spectrum.hpp"
#include "qdl/squeezing.hpp"

namespace qdl {

namespace {

struct ObservableInfo {
  Observable obs;
  const char* name;
  const char* unit;
};

constexpr std::array<ObservableInfo, 13> kObservables = {{
    {Observable::kInversion, "inversion_w", "1"},
    {Observable::kInversionEq10, "inversion_w_printed", "1"},
    {Observable::kExcitedPopulation, "rho_aa", "1"},
    {Observable::kCoherence, "sigma_plus", "1"},
    {Observable::kCoherentWeight, "coherent_weight", "1"},
    {Observable::kIncoherentPower, "incoherent_power", "1"},
    {Observable::kVarXNormal, "var_x_normal", "1"},
    {Observable::kVarYNormal, "var_y_normal", "1"},
    {Observable::kVarXNormalPaper, "var_x_normal_printed", "1"},
    {Observable::kCentralPeakHeight, "central_peak_height", "1/gamma"},
    {Observable::kCentralPeakFwhm, "central_peak_fwhm", "gamma"},
    {Observable::kSidebandPeakFwhm, "sideband_peak_fwhm", "gamma"},
    {Observable::kG2, "g2", "1"},
}};

const ObservableInfo& info(Observable obs) {
  for (const auto& entry : kObservables) {
    if (entry.obs == obs) return entry;
  }
  throw std::invalid_argument("unknown observable");
}

std::vector<Peak> spectrum_peaks(const SystemParams& p) {
  const double half = 2.0 * p.omega + 10.0 * p.gamma;
  return peaks(decompose(p), {-half, half});
}

}  // namespace

Observable parse_observable(const std::string& name) {
  for (const auto& entry : kObservables) {
    if (name == entry.name) return entry.obs;
  }
  throw std::invalid_argument("unknown observable '" + name + "'");
}

std::string observable_name(Observable obs) { return info(obs).name; }

std::string observable_column(Observable obs) {
  const auto& i = info(obs);
  return std::string(i.name) + " [" + i.unit + "]";
}

std::vector<std::string> observable_names() {
  std::vector<std::string> out;
  for (const auto& entry : kObservables) out.emplace_back(entry.name);
  return out;
}

unsigned thread_cap() {
  if (const char* env = std::getenv("QDL_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double observe(Observable obs, double omega, double gamma, double nbar, double tau) {
  const SystemParams p{omega, gamma, nbar};
  switch (obs) {
    case Observable::kInversion:
      return steady_state(p).inversion_w;
    case Observable::kInversionEq10:
      return paper_inversion_eq10(p);
    case Observable::kExcitedPopulation:
      return steady_state(p).rho_aa;
    case Observable::kCoherence:
      return steady_state(p).bloch.sp.real();
    case Observable::kCoherentWeight:
      return decompose(p).coherent_weight;
    case Observable::kIncoherentPower:
      return decompose(p).total_incoherent_power();
    case Observable::kVarXNormal:
      return quadrature_variances(p).var_x_normal;
    case Observable::kVarYNormal:
      return quadrature_variances(p).var_y_normal;
    case Observable::kVarXNormalPaper:
      return quadrature_variances(p, FormulaPath::kPaperVerbatim).var_x_normal;
    case Observable::kCentralPeakHeight:
    case Observable::kCentralPeakFwhm: {
      const auto found = spectrum_peaks(p);
      const auto central = std::min_element(found.begin(), found.end(), [](const Peak& a, const Peak& b) {
        return std::abs(a.center) < std::abs(b.center);
      });
      if (central == found.end()) return std::numeric_limits<double>::quiet_NaN();
      return obs == Observable::kCentralPeakHeight ? central->height : central->fwhm;
    }
    case Observable::kSidebandPeakFwhm: {
      for (const auto& peak : spectrum_peaks(p)) {
        if (peak.center > 0.5 * omega) return peak.fwhm;
      }
      return std::numeric_limits<double>::quiet_NaN();
    }
    case Observable::kG2:
      return G2Function(p)(tau);
  }
  throw std::invalid_argument("unknown observable");
}

Table run_sweep(const SweepConfig& config) {
  const std::vector<double> omegas = config.omega.values();
  const std::vector<double> nbars = config.nbar.values();
  validate({omegas.front(), config.gamma, nbars.front()});

  std::vector<std::pair<double, double>> points;
  points.reserve(omegas.size() * nbars.size());
  for (double w : omegas) {
    for (double n : nbars) points.emplace_back(w, n);
  }

  std::vector<double> values(points.size());
  const unsigned workers = std::max(
      1u, std::min<unsigned>(config.threads ? config.threads : thread_cap(),
                             static_cast<unsigned>(points.size())));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t k = id; k < points.size(); k += workers) {
        values[k] = observe(config.observable, points[k].first, config.gamma, points[k].second,
                            config.tau);
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  Table table;
  table.columns = {"omega [gamma]", "nbar [1]", observable_column(config.observable)};
  table.rows.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    table.rows.push_back({points[k].first, points[k].second, values[k]});
  }
  return table;
}

}  // namespace qdl
