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

#include "qdl/exponential_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdl {

void ExponentialSum::add_mode(complex rate, complex weight, int power) {
  if (!(rate.real() > 0.0)) throw std::domain_error("mode rate must have positive real part");
  if (power != 0 && power != 1) throw std::domain_error("mode power must be 0 or 1");
  // equal rates collapse into one term (e.g. the two dipole modes at omega = 0)
  for (auto& m : modes_) {
    if (m.power == power && std::abs(m.rate - rate) <= 1e-12 * std::abs(rate)) {
      m.weight += weight;
      return;
    }
  }
  modes_.push_back({rate, weight, power});
}

complex ExponentialSum::operator()(double tau) const {
  complex sum = constant_;
  for (const auto& m : modes_) {
    complex term = m.weight * std::exp(-m.rate * tau);
    if (m.power == 1) term *= tau;
    sum += term;
  }
  return sum;
}

complex ExponentialSum::at_zero() const {
  complex sum = constant_;
  for (const auto& m : modes_) {
    if (m.power == 0) sum += m.weight;
  }
  return sum;
}

complex ExponentialSum::laplace(complex s) const {
  complex sum{};
  for (const auto& m : modes_) {
    const complex denom = m.rate + s;
    sum += m.power == 0 ? m.weight / denom : m.weight / (denom * denom);
  }
  return sum;
}

double ExponentialSum::slowest_rate() const {
  double slowest = std::numeric_limits<double>::infinity();
  for (const auto& m : modes_) slowest = std::min(slowest, m.rate.real());
  return slowest;
}

ExponentialSum& ExponentialSum::operator*=(complex factor) {
  constant_ *= factor;
  for (auto& m : modes_) m.weight *= factor;
  return *this;
}

ExponentialSum ExponentialSum::pruned(double tol) const {
  ExponentialSum out(constant_);
  for (const auto& m : modes_) {
    if (std::abs(m.weight) > tol) out.modes_.push_back(m);
  }
  return out;
}

}  // namespace qdl
