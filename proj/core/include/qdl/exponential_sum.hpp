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

#include <vector>

#include "qdl/params.hpp"

namespace qdl {

/// One term weight * tau^power * exp(-rate * tau). power is 0 or 1; power 1 only
/// appears at the degenerate point where two decay rates coincide.
struct ExpMode {
  complex rate{};
  complex weight{};
  int power = 0;
};

/// f(tau) = constant + sum_k weight_k tau^p_k exp(-rate_k tau), every Re(rate_k) > 0.
class ExponentialSum {
 public:
  ExponentialSum() = default;
  explicit ExponentialSum(complex constant) : constant_(constant) {}

  /// Throws std::domain_error unless Re(rate) > 0 and power is 0 or 1. A mode whose
  /// rate and power match an existing one (to 1e-12 relative) is merged into it.
  void add_mode(complex rate, complex weight, int power = 0);

  complex constant() const { return constant_; }
  void set_constant(complex c) { constant_ = c; }
  const std::vector<ExpMode>& modes() const { return modes_; }

  complex operator()(double tau) const;
  /// constant + sum of the power-0 weights.
  complex at_zero() const;

  /// Integral over [0, inf) of (f - constant) * exp(-s tau), Re(s) > -min Re(rate).
  complex laplace(complex s) const;

  /// Smallest Re(rate); +inf for a pure constant.
  double slowest_rate() const;

  ExponentialSum& operator*=(complex factor);

  /// Drops modes whose |weight| <= tol.
  ExponentialSum pruned(double tol = 0.0) const;

 private:
  complex constant_{};
  std::vector<ExpMode> modes_;
};

}  // namespace qdl
