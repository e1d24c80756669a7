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

#include "qdl/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdl/correlators.hpp"
#include "qdl/dynamics.hpp"

namespace qdl {

double SpectrumDecomposition::evaluate(double omega) const {
  complex sum{};
  for (const auto& m : modes) {
    const complex denom = m.rate - complex{0.0, omega};
    sum += m.power == 0 ? m.weight / denom : m.weight / (denom * denom);
  }
  return 2.0 * sum.real();
}

double SpectrumDecomposition::derivative(double omega) const {
  const complex i{0.0, 1.0};
  complex sum{};
  for (const auto& m : modes) {
    const complex denom = m.rate - i * omega;
    const double factorial = m.power == 0 ? 1.0 : 2.0;
    sum += i * factorial * m.weight / std::pow(denom, m.power + 2);
  }
  return 2.0 * sum.real();
}

double SpectrumDecomposition::total_incoherent_power() const {
  double sum = 0.0;
  for (const auto& m : modes) {
    if (m.power == 0) sum += m.weight.real();
  }
  return 2.0 * std::numbers::pi * sum;
}

SpectrumDecomposition decompose(const SystemParams& params) {
  const ExponentialSum corr = dipole_correlator(params);
  SpectrumDecomposition out;
  out.coherent_weight = 2.0 * std::numbers::pi * corr.constant().real();
  out.modes = corr.modes();
  return out;
}

double mollow_strong(const SystemParams& params, double omega) {
  validate(params);
  const double g = params.gamma;
  const double n = params.nbar;
  const double side_width = g / 4.0 * (6.0 * n + 3.0);
  const double side_weight = g / 16.0 * (6.0 * n + 3.0);
  const double central_width = g / 2.0 * (1.0 + 2.0 * n);
  const double central_weight = g / 4.0 * (1.0 + 2.0 * n);
  const double w = params.omega;
  return side_weight / ((w + omega) * (w + omega) + side_width * side_width) +
         side_weight / ((w - omega) * (w - omega) + side_width * side_width) +
         central_weight / (omega * omega + central_width * central_width);
}

double integrate_incoherent(const SpectrumDecomposition& decomp, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  // 5-point Gauss-Legendre nodes/weights on [-1, 1].
  static constexpr std::array<double, 5> kNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                                   0.5384693101056831, 0.9061798459386640};
  static constexpr std::array<double, 5> kWeights = {0.2369268850561891, 0.4786286704993665,
                                                     0.5688888888888889, 0.4786286704993665,
                                                     0.2369268850561891};
  constexpr int kPanels = 8000;
  const double half_pi = 0.5 * std::numbers::pi;
  const double panel = 2.0 * half_pi / kPanels;
  double total = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double mid = -half_pi + (p + 0.5) * panel;
    for (std::size_t k = 0; k < kNodes.size(); ++k) {
      const double theta = mid + 0.5 * panel * kNodes[k];
      const double sec = 1.0 / std::cos(theta);
      total += 0.5 * panel * kWeights[k] * decomp.evaluate(scale * std::tan(theta)) * scale * sec * sec;
    }
  }
  return total;
}

namespace {

template <typename F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double half_crossing(const SpectrumDecomposition& d, double center, double half, double step,
                     double direction) {
  double inside = center;
  double outside = center + direction * step;
  for (int i = 0; i < 1'000'000 && d.evaluate(outside) > half; ++i) {
    inside = outside;
    outside += direction * step;
    step *= 1.05;
  }
  auto f = [&](double w) { return d.evaluate(w) - half; };
  return bisect(f, std::min(inside, outside), std::max(inside, outside), 1e-12);
}

}  // namespace

std::vector<Peak> peaks(const SpectrumDecomposition& decomp, std::pair<double, double> window) {
  std::vector<Peak> out;
  if (decomp.modes.empty() || !(window.second > window.first)) return out;
  double narrowest = decomp.modes.front().rate.real();
  for (const auto& m : decomp.modes) narrowest = std::min(narrowest, m.rate.real());
  const double h = narrowest / 16.0;
  const auto count = static_cast<std::size_t>(std::ceil((window.second - window.first) / h));
  const double step = (window.second - window.first) / static_cast<double>(count);

  auto slope = [&](double w) { return decomp.derivative(w); };
  double prev_w = window.first;
  double prev_d = slope(prev_w);
  for (std::size_t k = 1; k <= count; ++k) {
    const double w = window.first + step * static_cast<double>(k);
    const double d = slope(w);
    if (prev_d > 0.0 && d <= 0.0) {
      const double center = d == 0.0 ? w : bisect(slope, prev_w, w, 1e-13);
      Peak p;
      p.center = center;
      p.height = decomp.evaluate(center);
      const double half = 0.5 * p.height;
      const double left = half_crossing(decomp, center, half, step, -1.0);
      const double right = half_crossing(decomp, center, half, step, 1.0);
      p.fwhm = right - left;
      out.push_back(p);
    }
    prev_w = w;
    prev_d = d;
  }
  return out;
}

}  // namespace qdl
