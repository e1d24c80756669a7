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

#pragma once

#include <utility>
#include <vector>

#include "qdl/exponential_sum.hpp"
#include "qdl/params.hpp"

namespace qdl {

/// Emission spectrum split into an elastic delta at omega = 0 and an incoherent
/// continuum S_inc(omega) = 2 Re sum_k w_k p_k! / (lambda_k - i omega)^{p_k + 1}.
struct SpectrumDecomposition {
  double coherent_weight = 0.0;  ///< 2 pi <sigma_+>_ss^2
  std::vector<ExpMode> modes;

  double evaluate(double omega) const;
  /// d S_inc / d omega
  double derivative(double omega) const;
  /// Closed-form integral of S_inc over the real line, 2 pi Re sum of power-0 weights.
  double total_incoherent_power() const;
};

SpectrumDecomposition decompose(const SystemParams& params);

inline double eval(const SpectrumDecomposition& decomp, double omega) {
  return decomp.evaluate(omega);
}

/// Strong-drive three-Lorentzian form: central half-width gamma(1+2n)/2, sideband
/// half-width gamma(6n+3)/4 centred at +-omega.
double mollow_strong(const SystemParams& params, double omega);

/// Numerical integral of S_inc over the real line (Gauss-Legendre on omega = s tan(theta)).
double integrate_incoherent(const SpectrumDecomposition& decomp, double scale);

struct Peak {
  double center = 0.0;
  double height = 0.0;
  double fwhm = 0.0;
};

/// Local maxima of S_inc within [window.first, window.second], found by derivative
/// sign change on a grid finer than the narrowest mode and refined by bisection.
/// FWHM is the distance between the half-height crossings either side.
std::vector<Peak> peaks(const SpectrumDecomposition& decomp, std::pair<double, double> window);

}  // namespace qdl
